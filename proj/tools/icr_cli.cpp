// Command-line front end: construct, inspect, classify and count interchange
// rings on finite groups. Every subcommand prints deterministic text, or JSON
// with --json. Exit codes: 0 success, 1 failed check or internal error,
// 2 bad input, 3 refused workload (above a cap).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "icr/canonical.hpp"
#include "icr/classify.hpp"
#include "icr/common.hpp"
#include "icr/endo.hpp"
#include "icr/group.hpp"
#include "icr/interchange.hpp"
#include "icr/notation.hpp"
#include "icr/structures.hpp"
#include "icr/verify.hpp"

using nlohmann::json;
using namespace icr;

namespace {

std::string property_flags(const RingProperties& p) {
    std::string s;
    auto tag = [&](bool on, const char* name) {
        if (!on) return;
        if (!s.empty()) s += ' ';
        s += name;
    };
    tag(p.proper, "proper");
    tag(p.commutative, "commutative");
    tag(p.associative, "associative");
    tag(p.idempotent_product, "idempotent");
    tag(p.band, "band");
    tag(p.zero_semigroup, "zero");
    if (p.essential != EssentialKind::none)
        s += (s.empty() ? "" : " ") + std::string("essential:") +
             essential_kind_name(p.essential);
    if (s.empty()) s = "-";
    return s;
}

json properties_json(const RingProperties& p) {
    json j;
    j["associative"] = p.associative;
    j["band"] = p.band;
    j["commutative"] = p.commutative;
    j["essential"] = p.essential == EssentialKind::none
                         ? json(nullptr)
                         : json(essential_kind_name(p.essential));
    j["idempotent_product"] = p.idempotent_product;
    j["proper"] = p.proper;
    j["zero_semigroup"] = p.zero_semigroup;
    return j;
}

json counts_json(const ClassCounts& c) {
    json j;
    j["associative_classes"] = c.associative;
    j["band_classes"] = c.band;
    j["classes"] = c.classes;
    j["commutative_associative_classes"] = c.commutative_associative;
    j["commutative_classes"] = c.commutative;
    j["essential_classes"] = c.essential;
    j["idempotent_product_classes"] = c.idempotent_product;
    j["inessential_classes"] = c.inessential;
    j["pairs"] = c.pairs;
    j["proper_classes"] = c.proper;
    j["zero_semigroup_classes"] = c.zero_semigroup;
    return j;
}

void print_counts_text(std::ostream& out, const ClassCounts& c) {
    out << "pairs:                      " << c.pairs << "\n";
    out << "classes:                    " << c.classes << "\n";
    out << "  associative:              " << c.associative << "\n";
    out << "  commutative:              " << c.commutative << "\n";
    out << "  commutative associative:  " << c.commutative_associative << "\n";
    out << "  idempotent product:       " << c.idempotent_product << "\n";
    out << "  band:                     " << c.band << "\n";
    out << "  proper:                   " << c.proper << "\n";
    out << "  zero semigroup:           " << c.zero_semigroup << "\n";
    out << "  essential:                " << c.essential << "\n";
    out << "  inessential:              " << c.inessential << "\n";
}

std::uint64_t parse_mask_arg(const FiniteGroup& G, const std::string& text) {
    // comma-separated element list, e.g. "0,3"
    std::uint64_t mask = 0;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw ParseError("empty element in set: " + text);
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("bad element '" + tok + "' in set");
        }
        if (used != tok.size()) throw ParseError("bad element '" + tok + "' in set");
        if (v < 0 || v >= G.n)
            throw ParseError("element " + std::to_string(v) + " out of range for " + G.name);
        mask |= 1ull << v;
    }
    if (mask == 0) throw ParseError("empty element set");
    return mask;
}

int cmd_info(const std::string& spec, bool as_json, std::ostream& out) {
    FiniteGroup G = parse_group_spec(spec);
    json j;
    j["abelian"] = G.abelian;
    j["name"] = G.name;
    j["order"] = G.n;
    std::string decomposition;
    if (G.abelian) {
        PpcBasis basis = ppc_decompose(G);
        for (std::size_t i = 0; i < basis.orders.size(); ++i)
            decomposition += (i ? "+" : "") + ("Z" + std::to_string(basis.orders[i]));
        if (decomposition.empty()) decomposition = "Z1";
        j["decomposition"] = decomposition;
        j["rank"] = ppc_rank(G);
    }
    int p = 0, e = 0, r = 0;
    bool homo = G.abelian && is_homocyclic(G, &p, &e, &r);
    if (homo) {
        json h;
        h["exponent"] = e;
        h["prime"] = p;
        h["rank"] = r;
        j["homocyclic"] = h;
    }
    std::uint64_t endo_count = count_endomorphisms(G);
    j["endomorphisms"] = endo_count;
    bool enumerable = endo_count <= kEndoEnumLimit;
    if (enumerable) {
        j["automorphisms"] = enumerate_automorphisms(G).size();
        j["idempotents"] = enumerate_idempotents(G).size();
    } else if (G.abelian && G.n <= 64) {
        j["idempotents"] = enumerate_idempotents(G).size();
    }
    if (G.n <= 64) j["subgroups"] = enumerate_subgroup_masks(G).size();
    try {
        j["associative_pairs"] = count_associative_pairs(G);
    } catch (const CapError&) {
    }
    if (as_json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "name:               " << G.name << "\n";
    out << "order:              " << G.n << "\n";
    out << "abelian:            " << (G.abelian ? "yes" : "no") << "\n";
    if (G.abelian) {
        out << "decomposition:      " << decomposition << "\n";
        out << "rank:               " << j["rank"].get<int>() << "\n";
    }
    if (homo)
        out << "homocyclic:         p=" << p << " exponent=" << e << " rank=" << r << "\n";
    out << "endomorphisms:      " << endo_count << "\n";
    if (j.contains("automorphisms"))
        out << "automorphisms:      " << j["automorphisms"].get<std::uint64_t>() << "\n";
    if (j.contains("idempotents"))
        out << "idempotents:        " << j["idempotents"].get<std::uint64_t>() << "\n";
    if (j.contains("subgroups"))
        out << "subgroups:          " << j["subgroups"].get<std::uint64_t>() << "\n";
    if (j.contains("associative_pairs"))
        out << "associative pairs:  " << j["associative_pairs"].get<std::uint64_t>() << "\n";
    return 0;
}

int cmd_endos(const std::string& spec, bool autos_only, bool idem_only, std::uint64_t limit,
              bool as_json, std::ostream& out) {
    FiniteGroup G = parse_group_spec(spec);
    std::vector<Endomorphism> list;
    if (autos_only)
        list = enumerate_automorphisms(G);
    else if (idem_only)
        list = enumerate_idempotents(G);
    else
        list = enumerate_endomorphisms(G);
    std::uint64_t shown = std::min<std::uint64_t>(limit, list.size());
    if (as_json) {
        json j;
        j["count"] = list.size();
        j["group"] = G.name;
        json maps = json::array();
        for (std::uint64_t i = 0; i < shown; ++i) maps.push_back(format_endo(list[i]));
        j["maps"] = maps;
        j["truncated"] = shown < list.size();
        out << j.dump(2) << "\n";
        return 0;
    }
    out << list.size() << (autos_only ? " automorphisms"
                           : idem_only ? " idempotent endomorphisms"
                                       : " endomorphisms")
        << " of " << G.name << "\n";
    for (std::uint64_t i = 0; i < shown; ++i)
        out << i << ": " << format_endo(list[i]) << "\n";
    if (shown < list.size()) out << "... (" << (list.size() - shown) << " more)\n";
    return 0;
}

int cmd_classify(const std::string& spec, bool associative_only, bool reps,
                 std::uint64_t limit, bool as_json, std::ostream& out) {
    FiniteGroup G = parse_group_spec(spec);
    Classification c = associative_only ? classify_associative(G) : classify_all_pairs(G);
    json j;
    j["counts"] = counts_json(c.counts);
    j["group"] = G.name;
    j["scope"] = associative_only ? "associative" : "all";
    if (reps) {
        json rows = json::array();
        std::uint64_t shown = std::min<std::uint64_t>(limit, c.orbits.size());
        for (std::uint64_t i = 0; i < shown; ++i) {
            const Orbit& o = c.orbits[i];
            json row;
            row["orbit_size"] = o.members.size();
            row["pair"] = format_pair(o.rep);
            row["properties"] = properties_json(pair_properties(G, o.rep));
            rows.push_back(row);
        }
        j["representatives"] = rows;
        j["truncated"] = shown < c.orbits.size();
    }
    if (as_json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "group: " << G.name << (associative_only ? " (associative products only)" : "")
        << "\n";
    print_counts_text(out, c.counts);
    if (reps) {
        std::uint64_t shown = std::min<std::uint64_t>(limit, c.orbits.size());
        out << "representatives:\n";
        for (std::uint64_t i = 0; i < shown; ++i) {
            const Orbit& o = c.orbits[i];
            out << "  " << format_pair(o.rep) << "  orbit=" << o.members.size() << "  "
                << property_flags(pair_properties(G, o.rep)) << "\n";
        }
        if (shown < c.orbits.size())
            out << "  ... (" << (c.orbits.size() - shown) << " more)\n";
    }
    return 0;
}

int cmd_census(int max_order, bool abelian_only, bool as_json, std::ostream& out) {
    if (max_order < 1) throw ParseError("census needs a positive maximum order");
    json rows = json::array();
    for (int k = 1; k <= max_order; ++k) {
        std::vector<FiniteGroup> groups;
        if (abelian_only) {
            groups = abelian_groups_of_order(k);
        } else {
            OrderCorpus corpus = groups_of_order(k);
            if (!corpus.complete)
                throw CapError("no complete group catalogue for order " + std::to_string(k) +
                               "; use --abelian or a smaller maximum");
            groups = std::move(corpus.groups);
        }
        for (const FiniteGroup& G : groups) {
            Classification c = classify_all_pairs(G);
            json row;
            row["counts"] = counts_json(c.counts);
            row["group"] = G.name;
            row["order"] = k;
            rows.push_back(row);
        }
    }
    if (as_json) {
        json j;
        j["abelian_only"] = abelian_only;
        j["max_order"] = max_order;
        j["rows"] = rows;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "order  group        pairs  classes  assoc  comm  band  proper  essential\n";
    for (const json& row : rows) {
        const json& c = row["counts"];
        char buf[160];
        std::snprintf(buf, sizeof buf, "%5d  %-10s %6llu %8llu %6llu %5llu %5llu %7llu %10llu",
                      row["order"].get<int>(), row["group"].get<std::string>().c_str(),
                      static_cast<unsigned long long>(c["pairs"].get<std::uint64_t>()),
                      static_cast<unsigned long long>(c["classes"].get<std::uint64_t>()),
                      static_cast<unsigned long long>(c["associative_classes"].get<std::uint64_t>()),
                      static_cast<unsigned long long>(c["commutative_classes"].get<std::uint64_t>()),
                      static_cast<unsigned long long>(c["band_classes"].get<std::uint64_t>()),
                      static_cast<unsigned long long>(c["proper_classes"].get<std::uint64_t>()),
                      static_cast<unsigned long long>(c["essential_classes"].get<std::uint64_t>()));
        out << buf << "\n";
    }
    return 0;
}

int cmd_canonical(const std::string& spec, const std::string& pair_text,
                  const std::string& triple_text, bool as_json, std::ostream& out) {
    FiniteGroup G = parse_group_spec(spec);
    if (!pair_text.empty()) {
        // Diagonalization works on every abelian group; the canonical triple
        // labels the class only when the group is homocyclic.
        EndoPair p = parse_pair(G, pair_text);
        Diagonalization d = diagonalize_pair(G, p);
        const bool hc = is_homocyclic(G);
        auto coeff_text = [](const std::vector<int>& v) {
            std::string s;
            for (int c : v) s += static_cast<char>('0' + c);
            return s;
        };
        json j;
        j["conjugator"] = format_endo(d.w);
        j["diagonal1"] = coeff_text(d.diag1);
        j["diagonal2"] = coeff_text(d.diag2);
        j["group"] = G.name;
        j["pair"] = format_pair(p);
        if (hc) {
            const CanonicalTriple t = triple_from_diagonal(d);
            j["canonical_pair"] = format_pair(canonical_pair(G, t));
            j["triple"] = format_triple(t);
            json dims = json::array();
            for (int v : diagonal_dims(d)) dims.push_back(v);
            j["dims"] = dims;
        }
        if (as_json) {
            out << j.dump(2) << "\n";
            return 0;
        }
        out << "group:          " << G.name << "\n";
        out << "pair:           " << format_pair(p) << "\n";
        out << "diagonals:      " << coeff_text(d.diag1) << " / " << coeff_text(d.diag2) << "\n";
        out << "conjugator:     " << format_endo(d.w) << "\n";
        if (hc) {
            const CanonicalTriple t = triple_from_diagonal(d);
            out << "triple:         " << format_triple(t) << "\n";
            std::array<int, 4> dv = diagonal_dims(d);
            out << "block dims:     " << dv[0] << " " << dv[1] << " " << dv[2] << " " << dv[3]
                << "\n";
            out << "canonical pair: " << format_pair(canonical_pair(G, t)) << "\n";
        }
        return 0;
    }
    HomocyclicShape shape = homocyclic_shape(G);
    if (!triple_text.empty()) {
        CanonicalTriple t = parse_triple(triple_text);
        EndoPair canon = canonical_pair(G, t);  // validates the triple against the rank
        json j;
        j["bucket_size"] = bucket_size_formula(shape, t);
        j["canonical_pair"] = format_pair(canon);
        j["group"] = G.name;
        j["triple"] = format_triple(t);
        if (as_json) {
            out << j.dump(2) << "\n";
            return 0;
        }
        out << "group:          " << G.name << "\n";
        out << "triple:         " << format_triple(t) << "\n";
        out << "canonical pair: " << format_pair(canon) << "\n";
        out << "bucket size:    " << bucket_size_formula(shape, t) << "\n";
        return 0;
    }
    // default: the full bucket table
    std::vector<CanonicalTriple> triples = all_canonical_triples(shape.rank);
    json rows = json::array();
    std::uint64_t total = 0;
    for (const CanonicalTriple& t : triples) {
        std::uint64_t size = bucket_size_formula(shape, t);
        total += size;
        json row;
        row["bucket_size"] = size;
        json dims = json::array();
        for (int v : dim_vector(t, shape.rank)) dims.push_back(v);
        row["dims"] = dims;
        row["triple"] = format_triple(t);
        rows.push_back(row);
    }
    json j;
    j["buckets"] = rows;
    j["classes"] = triples.size();
    j["group"] = G.name;
    j["total_pairs"] = total;
    if (as_json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "group: " << G.name << "  (p=" << shape.prime << " exponent=" << shape.exp
        << " rank=" << shape.rank << ")\n";
    out << "triple      dims         bucket size\n";
    for (const json& row : rows) {
        char buf[96];
        const json& dims = row["dims"];
        std::string dimtext = std::to_string(dims[0].get<int>()) + "," +
                              std::to_string(dims[1].get<int>()) + "," +
                              std::to_string(dims[2].get<int>()) + "," +
                              std::to_string(dims[3].get<int>());
        std::snprintf(buf, sizeof buf, "%-10s  %-11s %12llu",
                      row["triple"].get<std::string>().c_str(), dimtext.c_str(),
                      static_cast<unsigned long long>(row["bucket_size"].get<std::uint64_t>()));
        out << buf << "\n";
    }
    out << "classes: " << triples.size() << "   total pairs: " << total << "\n";
    return 0;
}

int cmd_bounds(int rank, bool check, bool as_json, std::ostream& out) {
    if (rank < 0 || rank > 62) throw ParseError("rank out of range");
    json j;
    j["associative_class_bound"] = associative_class_bound(rank);
    j["band_class_bound"] = band_class_bound(rank);
    j["canonical_triples"] = canonical_triple_count(rank);
    j["rank"] = rank;
    std::uint64_t witness = squarefree_witness_order(rank);
    j["witness_order"] = witness;
    std::string attained;
    if (check) {
        if (witness > static_cast<std::uint64_t>(size_cap()))
            throw CapError("tightness witness has order " + std::to_string(witness) +
                           ", above the cap " + std::to_string(size_cap()));
        FiniteGroup G = builtin_group("Z" + std::to_string(witness));
        Classification c = classify_associative(G);
        j["witness_associative_classes"] = c.counts.classes;
        j["witness_band_classes"] = c.counts.band;
        bool tight = c.counts.classes == associative_class_bound(rank) &&
                     c.counts.band == band_class_bound(rank);
        j["witness_attains_bounds"] = tight;
        attained = tight ? "yes" : "NO";
        if (!tight) {
            if (as_json) out << j.dump(2) << "\n";
            return 1;
        }
    }
    if (as_json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "rank:                     " << rank << "\n";
    out << "canonical triples:        " << canonical_triple_count(rank) << "\n";
    out << "associative class bound:  " << associative_class_bound(rank) << "\n";
    out << "band class bound:         " << band_class_bound(rank) << "\n";
    out << "tightness witness:        Z" << witness << "\n";
    if (check) {
        out << "witness associative:      " << j["witness_associative_classes"].get<std::uint64_t>()
            << "\n";
        out << "witness band:             " << j["witness_band_classes"].get<std::uint64_t>()
            << "\n";
        out << "bounds attained:          " << attained << "\n";
    }
    return 0;
}

int cmd_table(const std::string& spec, const std::string& pair_text,
              const std::string& check_file, bool as_json, std::ostream& out) {
    FiniteGroup G = parse_group_spec(spec);
    if (!check_file.empty()) {
        std::ifstream in(check_file);
        if (!in) throw ParseError("cannot open " + check_file);
        std::vector<long long> raw;
        long long v;
        while (in >> v) raw.push_back(v);
        // tolerate the leading order line our own table printer emits
        std::size_t cells = static_cast<std::size_t>(G.n) * G.n;
        if (raw.size() == cells + 1 && raw.front() == G.n) raw.erase(raw.begin());
        if (raw.size() != cells)
            throw ParseError("product table has " + std::to_string(raw.size()) +
                             " entries, expected " + std::to_string(cells));
        std::vector<elem_t> prod;
        for (long long x : raw) {
            if (x < 0 || x >= G.n)
                throw ParseError("product entry " + std::to_string(x) + " out of range");
            prod.push_back(static_cast<elem_t>(x));
        }
        LawCheckResult res = check_interchange_law(G, prod);
        json j;
        j["group"] = G.name;
        j["ok"] = res.ok;
        if (!res.ok) {
            j["reason"] = res.reason;
            json w = json::array();
            for (int x : res.witness) w.push_back(x);
            j["witness"] = w;
        } else {
            EndoPair p = extract_pair(ring_from_table(G, prod));
            j["pair"] = format_pair(p);
        }
        if (as_json)
            out << j.dump(2) << "\n";
        else if (res.ok)
            out << "ok: product satisfies the interchange law; pair "
                << j["pair"].get<std::string>() << "\n";
        else
            out << "violated: " << res.reason << " at (" << res.witness[0] << ","
                << res.witness[1] << "," << res.witness[2] << "," << res.witness[3] << ")\n";
        return res.ok ? 0 : 1;
    }
    std::vector<elem_t> table;
    std::string kind;
    if (!pair_text.empty()) {
        EndoPair p = parse_pair(G, pair_text);
        table = build_from_pair(G, p).prod;
        kind = "product";
    } else {
        table = G.add_table;
        kind = "addition";
    }
    if (as_json) {
        json j;
        j["group"] = G.name;
        j["kind"] = kind;
        j["order"] = G.n;
        json rows = json::array();
        for (int x = 0; x < G.n; ++x) {
            json row = json::array();
            for (int y = 0; y < G.n; ++y)
                row.push_back(table[static_cast<std::size_t>(x) * G.n + y]);
            rows.push_back(row);
        }
        j["table"] = rows;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << format_cayley_text(G.n, table);
    return 0;
}

int cmd_ideals(const std::string& spec, const std::string& pair_text,
               const std::string& quotient_text, bool as_json, std::ostream& out) {
    FiniteGroup G = parse_group_spec(spec);
    if (G.n > 30) throw CapError("ideal enumeration is limited to order 30");
    EndoPair p = parse_pair(G, pair_text);
    InterchangeRing R = build_from_pair(G, p);
    if (!quotient_text.empty()) {
        std::uint64_t mask = parse_mask_arg(G, quotient_text);
        if (!is_ideal(R, mask))
            throw ValidationError(format_mask(mask) + " is not an ideal of this ring");
        std::vector<int> classes;
        InterchangeRing Q = quotient_ring(R, mask, &classes);
        EndoPair qp = extract_pair(Q);
        json j;
        j["classes"] = classes;
        j["group"] = G.name;
        j["ideal"] = format_mask(mask);
        j["quotient_order"] = Q.group.n;
        j["quotient_pair"] = format_pair(qp);
        j["quotient_properties"] = properties_json(pair_properties(Q.group, qp));
        if (as_json) {
            out << j.dump(2) << "\n";
            return 0;
        }
        out << "ring:            " << G.name << " with pair " << format_pair(p) << "\n";
        out << "ideal:           " << format_mask(mask) << "\n";
        out << "quotient order:  " << Q.group.n << "\n";
        out << "quotient pair:   " << format_pair(qp) << "\n";
        out << "properties:      " << property_flags(pair_properties(Q.group, qp)) << "\n";
        out << "element classes:";
        for (int c : classes) out << " " << c;
        out << "\n";
        return 0;
    }
    std::vector<std::uint64_t> ideals = enumerate_ideal_masks(R);
    std::uint64_t whole = (G.n == 64) ? ~0ull : ((1ull << G.n) - 1);
    json rows = json::array();
    for (std::uint64_t m : ideals) {
        json row;
        row["elements"] = format_mask(m);
        row["maximal"] = (m != whole) && is_maximal_ideal_direct(R, m);
        row["proper"] = m != whole;
        row["size"] = std::popcount(m);
        rows.push_back(row);
    }
    json j;
    j["group"] = G.name;
    j["ideals"] = rows;
    j["pair"] = format_pair(p);
    j["simple"] = is_simple(R);
    if (as_json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "ring:   " << G.name << " with pair " << format_pair(p) << "\n";
    out << "simple: " << (is_simple(R) ? "yes" : "no") << "\n";
    out << "ideals (" << ideals.size() << "):\n";
    for (const json& row : rows)
        out << "  " << row["elements"].get<std::string>()
            << (row["maximal"].get<bool>() ? "  (maximal)" : "") << "\n";
    return 0;
}

int cmd_matrix(const std::string& spec, const std::string& pair_text, int m, bool show_table,
               bool as_json, std::ostream& out) {
    FiniteGroup G = parse_group_spec(spec);
    EndoPair p = parse_pair(G, pair_text);
    InterchangeRing R = build_from_pair(G, p);
    InterchangeRing M = matrix_ring(R, m);
    EndoPair mp = extract_pair(M);
    RingProperties props = pair_properties(M.group, mp);
    json j;
    j["base_group"] = G.name;
    j["base_pair"] = format_pair(p);
    j["name"] = M.group.name;
    j["order"] = M.group.n;
    j["properties"] = properties_json(props);
    j["size"] = m;
    if (as_json) {
        if (show_table) {
            json rows = json::array();
            for (int x = 0; x < M.group.n; ++x) {
                json row = json::array();
                for (int y = 0; y < M.group.n; ++y) row.push_back(M.mul(x, y));
                rows.push_back(row);
            }
            j["product_table"] = rows;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "matrix ring:  " << M.group.name << " (" << m << "x" << m << " over " << G.name
        << " with pair " << format_pair(p) << ")\n";
    out << "order:        " << M.group.n << "\n";
    out << "properties:   " << property_flags(props) << "\n";
    if (show_table) out << format_cayley_text(M.group.n, M.prod);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interchange rings on finite groups: construction, classification, counting"};
    app.require_subcommand(1);
    bool as_json = false;
    int cap = 0;
    app.add_flag("--json", as_json, "JSON output");
    app.add_option("--cap", cap, "override the group size cap (default 256)");

    std::string spec, pair_text, triple_text, quotient_text, check_file;
    bool autos_only = false, idem_only = false, associative_only = false, reps = false;
    bool abelian_only = false, check = false, quick = false, show_table = false;
    std::uint64_t limit = 1000000;
    int max_order = 8, rank = 2, msize = 2;

    CLI::App* info = app.add_subcommand("info", "group facts and object counts");
    info->add_option("group", spec, "group spec, e.g. Z6, Z2+Z4, S3, table:FILE")->required();

    CLI::App* endos = app.add_subcommand("endos", "list endomorphisms");
    endos->add_option("group", spec)->required();
    endos->add_flag("--automorphisms", autos_only, "only invertible ones");
    endos->add_flag("--idempotent", idem_only, "only idempotent ones");
    endos->add_option("--limit", limit, "print at most this many");

    CLI::App* classify = app.add_subcommand("classify", "count similarity classes of products");
    classify->add_option("group", spec)->required();
    classify->add_flag("--associative", associative_only, "associative products only");
    classify->add_flag("--reps", reps, "print one representative per class");
    classify->add_option("--limit", limit, "cap the printed representatives");

    CLI::App* census = app.add_subcommand("census", "classification counts for all groups up to an order");
    census->add_option("max_order", max_order, "largest group order")->required();
    census->add_flag("--abelian", abelian_only, "abelian groups only (complete at any order)");

    CLI::App* canonical =
        app.add_subcommand("canonical", "diagonalize pairs, list canonical forms");
    canonical->add_option("group", spec)->required();
    canonical->add_option("--pair", pair_text, "diagonalize this pair (any abelian group)");
    canonical->add_option("--triple", triple_text, "print the canonical pair of a triple");

    CLI::App* bounds = app.add_subcommand("bounds", "class-count bounds by rank");
    bounds->add_option("rank", rank)->required();
    bounds->add_flag("--check", check, "classify the cyclic tightness witness");

    CLI::App* table = app.add_subcommand("table", "print or check product tables");
    table->add_option("group", spec)->required();
    table->add_option("--pair", pair_text, "print the product table of this pair");
    table->add_option("--check-file", check_file, "check a product table read from a file");

    CLI::App* ideals = app.add_subcommand("ideals", "ideals and quotients of a ring");
    ideals->add_option("group", spec)->required();
    ideals->add_option("--pair", pair_text, "defining pair")->required();
    ideals->add_option("--quotient", quotient_text, "quotient by this ideal, e.g. 0,3");

    CLI::App* matrix = app.add_subcommand("matrix", "matrix rings over a ring");
    matrix->add_option("group", spec)->required();
    matrix->add_option("--pair", pair_text, "defining pair")->required();
    matrix->add_option("--size", msize, "matrix dimension (default 2)");
    matrix->add_flag("--show-table", show_table, "print the product table");

    CLI::App* verify = app.add_subcommand("verify", "run the cross-validation battery");
    verify->add_flag("--quick", quick, "skip the longest sweeps");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cap > 0) {
        std::string v = std::to_string(cap);
        setenv("ICR_CAP", v.c_str(), 1);
    }

    try {
        if (*info) return cmd_info(spec, as_json, std::cout);
        if (*endos) {
            if (autos_only && idem_only)
                throw ParseError("--automorphisms and --idempotent are exclusive");
            return cmd_endos(spec, autos_only, idem_only, limit, as_json, std::cout);
        }
        if (*classify)
            return cmd_classify(spec, associative_only, reps, limit, as_json, std::cout);
        if (*census) return cmd_census(max_order, abelian_only, as_json, std::cout);
        if (*canonical) {
            if (!pair_text.empty() && !triple_text.empty())
                throw ParseError("--pair and --triple are exclusive");
            return cmd_canonical(spec, pair_text, triple_text, as_json, std::cout);
        }
        if (*bounds) return cmd_bounds(rank, check, as_json, std::cout);
        if (*table) return cmd_table(spec, pair_text, check_file, as_json, std::cout);
        if (*ideals) return cmd_ideals(spec, pair_text, quotient_text, as_json, std::cout);
        if (*matrix) return cmd_matrix(spec, pair_text, msize, show_table, as_json, std::cout);
        if (*verify) return run_verification(std::cout, quick) == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
