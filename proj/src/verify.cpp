#include "icr/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "icr/canonical.hpp"
#include "icr/classify.hpp"
#include "icr/common.hpp"
#include "icr/endo.hpp"
#include "icr/group.hpp"
#include "icr/interchange.hpp"
#include "icr/structures.hpp"

namespace icr {

namespace {

struct Harness {
    std::ostream& out;
    int failures = 0;
    int passed = 0;

    // Runs `body`, which returns an empty string on success or a failure
    // detail. Exceptions count as failures too.
    template <class Fn>
    void check(const std::string& name, Fn body) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        try {
            detail = body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (detail.empty()) {
            ++passed;
            out << "ok " << name << " (" << ms << " ms)\n";
        } else {
            ++failures;
            out << "FAIL " << name << ": " << detail << "\n";
        }
    }
};

std::string show_pair_indices(const FiniteGroup& G, const EndoPair& p) {
    std::string s = "(";
    for (elem_t v : p.left.map) s += std::to_string(v) + ".";
    s += "|";
    for (elem_t v : p.right.map) s += std::to_string(v) + ".";
    s += ") on " + G.name;
    return s;
}

// Every ordered endomorphism pair that defines a product (image-commuting).
std::vector<EndoPair> valid_pairs(const FiniteGroup& G) {
    std::vector<Endomorphism> endos = enumerate_endomorphisms(G);
    std::vector<EndoPair> out;
    for (const Endomorphism& f : endos)
        for (const Endomorphism& g : endos) {
            if (!G.abelian && !is_image_commuting(G, f, g)) continue;
            out.push_back({f, g});
        }
    return out;
}

bool law_violated_at(const FiniteGroup& G, const std::vector<elem_t>& prod,
                     const std::array<int, 4>& w) {
    auto mul = [&](int x, int y) { return prod[static_cast<std::size_t>(x) * G.n + y]; };
    int lhs = mul(G.add(w[0], w[1]), G.add(w[2], w[3]));
    int rhs = G.add(mul(w[0], w[2]), mul(w[1], w[3]));
    return lhs != rhs;
}

bool kind_matches_table(const InterchangeRing& R, EssentialKind k) {
    const FiniteGroup& G = R.group;
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y) {
            int want;
            switch (k) {
                case EssentialKind::zero: want = 0; break;
                case EssentialKind::left_factor: want = x; break;
                case EssentialKind::right_factor: want = y; break;
                case EssentialKind::addition: want = G.add(x, y); break;
                default: return false;
            }
            if (R.mul(x, y) != want) return false;
        }
    return true;
}

// Congruence compatibility by literal sweeps: mask is a subgroup and both
// operations are well-defined on its difference classes.
bool congruence_oracle(const InterchangeRing& R, std::uint64_t mask) {
    const FiniteGroup& G = R.group;
    if (!is_subgroup_mask(G, mask)) return false;
    auto same = [&](int x, int y) { return ((mask >> G.sub(x, y)) & 1) != 0; };
    for (int x = 0; x < G.n; ++x)
        for (int x2 = 0; x2 < G.n; ++x2) {
            if (!same(x, x2)) continue;
            for (int y = 0; y < G.n; ++y)
                for (int y2 = 0; y2 < G.n; ++y2) {
                    if (!same(y, y2)) continue;
                    if (!same(G.add(x, y), G.add(x2, y2))) return false;
                    if (!same(R.mul(x, y), R.mul(x2, y2))) return false;
                }
        }
    return true;
}

std::vector<FiniteGroup> small_group_corpus() {
    std::vector<FiniteGroup> out;
    for (int k = 1; k <= 8; ++k)
        for (FiniteGroup& G : groups_of_order(k).groups) out.push_back(std::move(G));
    return out;
}

}  // namespace

int run_verification(std::ostream& out, bool quick) {
    Harness h{out};

    // ----- Cayley table validation -----
    h.check("table-validation", []() -> std::string {
        struct Case {
            std::string text;
            std::string expect;  // substring of the error message
        };
        std::vector<Case> cases = {
            {"2\n0 1\n1\n", "entries"},
            {"2\n0 1\n1 2\n", "range"},
            {"2\n1 0\n0 1\n", "identity"},
            {"2\n0 1\n1 1\n", "inverse"},
            {"3\n0 1 2\n1 0 0\n2 0 1\n", "row"},
            // a loop: Latin with identity and inverses, but not associative
            {"5\n0 1 2 3 4\n1 0 3 4 2\n2 3 4 0 1\n3 4 1 2 0\n4 2 0 1 3\n", "associative"},
        };
        for (const Case& c : cases) {
            try {
                parse_cayley_text(c.text, "bad");
                return "accepted a malformed table (expected \"" + c.expect + "\")";
            } catch (const std::runtime_error& e) {  // parse or validation failure
                if (std::string(e.what()).find(c.expect) == std::string::npos)
                    return "wrong message for \"" + c.expect + "\" case: " + e.what();
            }
        }
        // and a well-formed one round-trips
        FiniteGroup Z3 = builtin_group("Z3");
        FiniteGroup back = parse_cayley_text(format_cayley_text(Z3.n, Z3.add_table), "Z3rt");
        if (!back.same_table(Z3)) return "format/parse round trip changed the table";
        return "";
    });

    // ----- endomorphism enumeration vs depth-first brute force -----
    h.check("endomorphism-enumeration", []() -> std::string {
        for (const FiniteGroup& G : small_group_corpus()) {
            std::vector<Endomorphism> fast = enumerate_endomorphisms(G);
            std::vector<Endomorphism> brute = brute_force_endomorphisms(G);
            if (fast != brute)
                return G.name + ": enumeration (" + std::to_string(fast.size()) +
                       ") differs from brute force (" + std::to_string(brute.size()) + ")";
            if (!std::is_sorted(fast.begin(), fast.end())) return G.name + ": not sorted";
            if (endo_index(fast, zero_endo(G)) < 0) return G.name + ": zero map missing";
            if (endo_index(fast, identity_endo(G)) < 0) return G.name + ": identity missing";
        }
        return "";
    });

    // ----- product-of-gcd count against enumeration -----
    h.check("endomorphism-count-formula", [&]() -> std::string {
        for (int k = 2; k <= (quick ? 16 : 36); ++k)
            for (const FiniteGroup& G : abelian_groups_of_order(k)) {
                std::uint64_t formula = count_endomorphisms(G);
                if (formula > kEndoEnumLimit) continue;  // rank 5 at order 32
                std::uint64_t listed = enumerate_endomorphisms(G).size();
                if (formula != listed)
                    return G.name + ": formula " + std::to_string(formula) + " vs listed " +
                           std::to_string(listed);
            }
        return "";
    });

    // ----- automorphism group sizes -----
    h.check("automorphism-groups", []() -> std::string {
        struct Case {
            const char* name;
            std::size_t count;
        };
        for (const Case& c : std::vector<Case>{{"S3", 6},
                                               {"D4", 8},
                                               {"Q8", 24},
                                               {"Z2+Z2", 6},
                                               {"Z8", 4},
                                               {"Z4+Z2", 8},
                                               {"Z2+Z2+Z2", 168}}) {
            FiniteGroup G = builtin_group(c.name);
            std::size_t got = enumerate_automorphisms(G).size();
            if (got != c.count)
                return std::string(c.name) + ": " + std::to_string(got) + " automorphisms, want " +
                       std::to_string(c.count);
        }
        return "";
    });

    // ----- idempotents: subgroup route vs filtering, image/kernel structure -----
    h.check("idempotent-enumeration", []() -> std::string {
        std::vector<FiniteGroup> gs = small_group_corpus();
        for (int k : {9, 12, 15, 16})
            for (FiniteGroup& G : abelian_groups_of_order(k)) gs.push_back(std::move(G));
        for (const FiniteGroup& G : gs) {
            std::vector<Endomorphism> route = enumerate_idempotents(G);
            std::vector<Endomorphism> filtered;
            for (const Endomorphism& f : enumerate_endomorphisms(G))
                if (is_idempotent(G, f)) filtered.push_back(f);
            std::sort(route.begin(), route.end());
            if (route != filtered) return G.name + ": idempotent routes disagree";
            for (const Endomorphism& e : route) {
                // image and kernel intersect trivially and multiply to |G|
                std::set<int> im;
                int ker = 0, both = 0;
                for (int x = 0; x < G.n; ++x) {
                    im.insert(e.apply(x));
                    if (e.apply(x) == 0) {
                        ++ker;
                        if (im.count(x) && e.apply(x) == x) ++both;
                    }
                }
                int fixed = 0;
                for (int x : im)
                    if (e.apply(x) == x) ++fixed;
                if (static_cast<int>(im.size()) != fixed)
                    return G.name + ": an idempotent moves a point of its own image";
                if (static_cast<int>(im.size()) * ker != G.n)
                    return G.name + ": |image| * |kernel| != |G| for an idempotent";
            }
        }
        return "";
    });

    // ----- associative pair count: formula route vs stream vs literal filter -----
    h.check("associative-pair-routes", []() -> std::string {
        std::vector<FiniteGroup> gs = small_group_corpus();
        for (int k : {9, 12, 16})
            for (FiniteGroup& G : abelian_groups_of_order(k)) gs.push_back(std::move(G));
        for (const FiniteGroup& G : gs) {
            std::uint64_t counted = count_associative_pairs(G);
            std::vector<EndoPair> streamed;
            for_each_associative_pair(G, [&](const EndoPair& p) { streamed.push_back(p); });
            if (counted != streamed.size())
                return G.name + ": count " + std::to_string(counted) + " vs streamed " +
                       std::to_string(streamed.size());
            std::vector<EndoPair> literal;
            std::vector<Endomorphism> idem = enumerate_idempotents(G);
            for (const Endomorphism& e : idem)
                for (const Endomorphism& f : idem)
                    if (commutes(G, e, f) && is_image_commuting(G, e, f))
                        literal.push_back({e, f});
            std::sort(streamed.begin(), streamed.end());
            std::sort(literal.begin(), literal.end());
            if (streamed != literal) return G.name + ": stream differs from the literal filter";
            // streamed pairs really yield associative products (sampled when large)
            std::size_t step = streamed.size() > 2000 ? streamed.size() / 500 : 1;
            for (std::size_t i = 0; i < streamed.size(); i += step) {
                InterchangeRing R = build_from_pair(G, streamed[i]);
                if (!magma_properties_oracle(R).associative)
                    return G.name + ": a streamed pair gives a non-associative product " +
                           show_pair_indices(G, streamed[i]);
            }
        }
        FiniteGroup z30 = builtin_group("Z30");
        if (count_associative_pairs(z30) != 64) return "Z30: associative pair count is not 64";
        return "";
    });

    // ----- structural law decision vs the O(n^4) oracle -----
    auto law_battery = [&](bool mutations) -> std::string {
        for (const FiniteGroup& G : small_group_corpus()) {
            std::vector<EndoPair> vp = valid_pairs(G);
            // sample large families, keep small ones exhaustive
            std::vector<std::size_t> indices;
            if (vp.size() > 1100) {
                for (std::size_t i = 0; i < 512; ++i)
                    indices.push_back(mix64(i) % vp.size());
            } else {
                indices.resize(vp.size());
                for (std::size_t i = 0; i < vp.size(); ++i) indices[i] = i;
            }
            std::size_t mutation_budget = mutations ? (quick ? 24 : 96) : 0;
            for (std::size_t idx : indices) {
                const EndoPair& p = vp[idx];
                InterchangeRing R = build_from_pair(G, p);
                LawCheckResult structural = check_interchange_law(G, R.prod);
                if (!structural.ok)
                    return G.name + ": structural check rejects a valid product, " +
                           structural.reason;
                if (!brute_force_interchange_law(G, R.prod))
                    return G.name + ": oracle rejects a valid product";
                EndoPair back = extract_pair(R);
                if (!(back == p)) return G.name + ": extract_pair does not invert the build";
                if (mutation_budget > 0 && G.n >= 2) {
                    --mutation_budget;
                    std::vector<elem_t> bad = R.prod;
                    std::size_t cell = mix64(idx * 2 + 1) % bad.size();
                    bad[cell] = static_cast<elem_t>((bad[cell] + 1) % G.n);
                    LawCheckResult verdict = check_interchange_law(G, bad);
                    if (verdict.ok) return G.name + ": structural check accepts a mutated table";
                    if (!law_violated_at(G, bad, verdict.witness))
                        return G.name + ": reported witness does not violate the law";
                    std::array<int, 4> bw;
                    if (brute_force_interchange_law(G, bad, &bw))
                        return G.name + ": oracle accepts a mutated table";
                    if (!law_violated_at(G, bad, bw))
                        return G.name + ": oracle witness does not violate the law";
                }
            }
            // non-image-commuting pairs give tables that fail the law
            if (!G.abelian) {
                std::vector<Endomorphism> endos = enumerate_endomorphisms(G);
                int tested = 0;
                for (const Endomorphism& f : endos) {
                    for (const Endomorphism& g : endos) {
                        if (is_image_commuting(G, f, g)) continue;
                        std::vector<elem_t> prod(static_cast<std::size_t>(G.n) * G.n);
                        for (int x = 0; x < G.n; ++x)
                            for (int y = 0; y < G.n; ++y)
                                prod[static_cast<std::size_t>(x) * G.n + y] =
                                    static_cast<elem_t>(G.add(f.apply(x), g.apply(y)));
                        if (brute_force_interchange_law(G, prod))
                            return G.name + ": a non-image-commuting pair satisfied the law";
                        if (check_interchange_law(G, prod).ok)
                            return G.name + ": structural check missed a bad pair";
                        if (++tested >= 16) break;
                    }
                    if (tested >= 16) break;
                }
            }
        }
        return "";
    };
    h.check("law-decision", [&] { return law_battery(false); });
    h.check("law-decision-mutations", [&] { return law_battery(true); });

    // ----- properties from the pair vs full table sweeps -----
    h.check("pair-properties", [&]() -> std::string {
        for (const FiniteGroup& G : small_group_corpus()) {
            std::vector<EndoPair> vp = valid_pairs(G);
            std::vector<std::size_t> indices;
            if (vp.size() > 1100) {
                for (std::size_t i = 0; i < (quick ? 256 : 1024); ++i)
                    indices.push_back(mix64(i ^ 0x9e37u) % vp.size());
            } else {
                indices.resize(vp.size());
                for (std::size_t i = 0; i < vp.size(); ++i) indices[i] = i;
            }
            for (std::size_t idx : indices) {
                const EndoPair& p = vp[idx];
                InterchangeRing R = build_from_pair(G, p);
                RingProperties a = pair_properties(G, p);
                RingProperties b = magma_properties_oracle(R);
                if (a.commutative != b.commutative || a.associative != b.associative ||
                    a.idempotent_product != b.idempotent_product || a.band != b.band ||
                    a.proper != b.proper || a.zero_semigroup != b.zero_semigroup ||
                    a.essential != b.essential)
                    return G.name + ": property routes disagree for " + show_pair_indices(G, p);
            }
        }
        return "";
    });

    // ----- identities that hold in every ring -----
    h.check("product-identities", [&]() -> std::string {
        for (const FiniteGroup& G : small_group_corpus()) {
            std::vector<EndoPair> vp = valid_pairs(G);
            std::vector<std::size_t> indices;
            if (vp.size() > 1100) {
                for (std::size_t i = 0; i < 256; ++i)
                    indices.push_back(mix64(i ^ 0x51f1u) % vp.size());
            } else {
                indices.resize(vp.size());
                for (std::size_t i = 0; i < vp.size(); ++i) indices[i] = i;
            }
            std::size_t kfold_budget = 12;  // the k-fold sweeps are the expensive part
            for (std::size_t idx : indices) {
                InterchangeRing R = build_from_pair(G, vp[idx]);
                std::string why;
                if (!check_basic_identities(R, &why))
                    return G.name + ": " + why + " for " + show_pair_indices(G, vp[idx]);
                RingProperties props = pair_properties(G, vp[idx]);
                std::optional<int> absorbing = find_absorbing_element(R);
                if (absorbing.has_value() != props.zero_semigroup)
                    return G.name + ": absorbing element vs zero-semigroup mismatch";
                if (absorbing.has_value() && *absorbing != 0)
                    return G.name + ": absorbing element is not 0";
                if (kfold_budget > 0) {
                    --kfold_budget;
                    for (int k = 2; k <= 3; ++k)
                        if (!check_kfold_identity(R, k))
                            return G.name + ": " + std::to_string(k) + "-fold identity fails";
                }
            }
        }
        return "";
    });

    // ----- the four degenerate products -----
    h.check("essential-products", []() -> std::string {
        for (const char* name : {"Z4", "Z2+Z2", "S3"}) {
            FiniteGroup G = builtin_group(name);
            Endomorphism z = zero_endo(G), id = identity_endo(G);
            struct Case {
                EndoPair pair;
                EssentialKind kind;
            };
            std::vector<Case> cases = {{{z, z}, EssentialKind::zero},
                                       {{id, z}, EssentialKind::left_factor},
                                       {{z, id}, EssentialKind::right_factor}};
            if (G.abelian) cases.push_back({{id, id}, EssentialKind::addition});
            for (const Case& c : cases) {
                if (essential_kind(G, c.pair) != c.kind)
                    return std::string(name) + ": wrong kind for " +
                           essential_kind_name(c.kind);
                InterchangeRing R = build_from_pair(G, c.pair);
                if (!kind_matches_table(R, c.kind))
                    return std::string(name) + ": table does not match kind " +
                           essential_kind_name(c.kind);
            }
        }
        // ties resolve toward zero on the one-element group
        FiniteGroup Z1 = builtin_group("Z1");
        EndoPair triv{identity_endo(Z1), identity_endo(Z1)};
        if (essential_kind(Z1, triv) != EssentialKind::zero)
            return "Z1: tie should resolve to the zero kind";
        // and a proper non-degenerate product has no kind
        FiniteGroup V = builtin_group("Z2+Z2");
        Endomorphism d1{{0, 0, 2, 2}};
        if (essential_kind(V, {d1, d1}) != EssentialKind::none)
            return "Z2+Z2: projection pair wrongly classified as degenerate";
        return "";
    });

    // ----- classification counts on pinned groups -----
    h.check("classification-counts", [&]() -> std::string {
        {
            FiniteGroup S3 = builtin_group("S3");
            Classification c = classify_all_pairs(S3);
            if (c.counts.pairs != 22) return "S3: pairs " + std::to_string(c.counts.pairs);
            if (c.counts.classes != 10) return "S3: classes " + std::to_string(c.counts.classes);
            if (c.counts.associative != 6)
                return "S3: associative " + std::to_string(c.counts.associative);
            if (c.counts.essential != 3 || c.counts.inessential != 7)
                return "S3: essential split " + std::to_string(c.counts.essential) + "+" +
                       std::to_string(c.counts.inessential);
        }
        {
            FiniteGroup V = builtin_group("Z2+Z2");
            Classification c = classify_all_pairs(V);
            if (c.counts.pairs != 256 || c.counts.classes != 56)
                return "Z2+Z2: " + std::to_string(c.counts.pairs) + " pairs, " +
                       std::to_string(c.counts.classes) + " classes";
            if (c.counts.associative != 10)
                return "Z2+Z2: associative " + std::to_string(c.counts.associative);
            if (c.counts.band != 3) return "Z2+Z2: band " + std::to_string(c.counts.band);
        }
        {
            FiniteGroup C6 = builtin_group("Z6");
            Classification c = classify_all_pairs(C6);
            if (c.counts.pairs != 36 || c.counts.classes != 36)
                return "Z6: every pair should be its own class";
            if (c.counts.associative != 16)
                return "Z6: associative " + std::to_string(c.counts.associative);
            if (c.counts.commutative_associative != 4)
                return "Z6: commutative associative " +
                       std::to_string(c.counts.commutative_associative);
            if (c.counts.band != 4) return "Z6: band " + std::to_string(c.counts.band);
        }
        if (!quick) {
            FiniteGroup E8 = builtin_group("Z2+Z2+Z2");
            Classification c = classify_all_pairs(E8);
            if (c.counts.pairs != 262144 || c.counts.classes != 1744)
                return "Z2+Z2+Z2: " + std::to_string(c.counts.classes) + " classes";
            Classification a = classify_associative(E8);
            if (a.counts.pairs != 1012 || a.counts.classes != 20 || a.counts.band != 4)
                return "Z2+Z2+Z2: associative classification off";
        }
        return "";
    });

    // ----- orbit counting vs the fixed-point average -----
    h.check("orbit-counting", [&]() -> std::string {
        std::vector<std::string> names = {"S3", "Z2+Z2", "Z6", "Z8", "Z4+Z2", "D4", "Q8"};
        if (!quick) names.push_back("Z2+Z2+Z2");
        for (const std::string& name : names) {
            FiniteGroup G = builtin_group(name);
            std::uint64_t via_orbits = classify_all_pairs(G).counts.classes;
            std::uint64_t via_average = burnside_all_pairs_class_count(G);
            if (via_orbits != via_average)
                return name + ": orbits " + std::to_string(via_orbits) + " vs average " +
                       std::to_string(via_average);
        }
        return "";
    });

    // ----- orbit structure: reps, membership, partition, invariance -----
    h.check("classification-invariance", []() -> std::string {
        for (const char* name : {"S3", "Z2+Z2"}) {
            FiniteGroup G = builtin_group(name);
            std::vector<Endomorphism> autos = enumerate_automorphisms(G);
            Classification c = classify_all_pairs(G);
            std::set<EndoPair> seen;
            std::uint64_t total = 0;
            for (const Orbit& orbit : c.orbits) {
                if (orbit.members.empty() || !(orbit.rep == orbit.members.front()))
                    return std::string(name) + ": rep is not the least member";
                if (!std::is_sorted(orbit.members.begin(), orbit.members.end()))
                    return std::string(name) + ": members not sorted";
                RingProperties want = pair_properties(G, orbit.rep);
                for (const EndoPair& m : orbit.members) {
                    if (!seen.insert(m).second)
                        return std::string(name) + ": orbits overlap";
                    ++total;
                    RingProperties got = pair_properties(G, m);
                    if (got.commutative != want.commutative ||
                        got.associative != want.associative || got.band != want.band ||
                        got.idempotent_product != want.idempotent_product ||
                        got.proper != want.proper || got.zero_semigroup != want.zero_semigroup ||
                        got.essential != want.essential)
                        return std::string(name) + ": a property differs inside an orbit";
                    if (!similar_pairs(G, autos, orbit.rep, m))
                        return std::string(name) + ": member not similar to rep";
                }
                // recomputing the orbit from an arbitrary member gives the same set
                std::vector<EndoPair> re = orbit_of_pair(G, autos, orbit.members.back());
                if (re != orbit.members)
                    return std::string(name) + ": orbit differs when grown from another member";
            }
            if (total != c.counts.pairs)
                return std::string(name) + ": orbits do not partition the pairs";
        }
        return "";
    });

    // ----- diagonalization buckets vs the closed formula -----
    h.check("diagonalization-buckets", [&]() -> std::string {
        std::vector<std::string> names = {"Z2+Z2", "Z3+Z3", "Z4+Z4"};
        if (!quick) names.push_back("Z2+Z2+Z2");
        for (const std::string& name : names) {
            FiniteGroup G = builtin_group(name);
            HomocyclicShape shape = homocyclic_shape(G);
            DiagonalizeContext ctx = make_diagonalize_context(G);
            std::map<CanonicalTriple, std::uint64_t> tally;
            std::string bad;
            for_each_associative_pair(G, [&](const EndoPair& p) {
                if (!bad.empty()) return;
                Diagonalization d = diagonalize_pair(ctx, p);
                CanonicalTriple block_route = triple_from_diagonal(d);
                if (!(block_route == invariant_triple(G, p)))
                    bad = name + ": triple routes disagree";
                ++tally[block_route];
            });
            if (!bad.empty()) return bad;
            std::uint64_t total = 0;
            for (const CanonicalTriple& t : all_canonical_triples(shape.rank)) {
                std::uint64_t formula = bucket_size_formula(shape, t);
                std::uint64_t observed = tally.count(t) ? tally[t] : 0;
                if (formula != observed)
                    return name + ": bucket (" + std::to_string(t.s) + "," +
                           std::to_string(t.t1) + "," + std::to_string(t.t2) + ") observed " +
                           std::to_string(observed) + " vs formula " + std::to_string(formula);
                total += formula;
            }
            if (total != count_associative_pairs(G) ||
                total != total_associative_pairs_formula(shape))
                return name + ": bucket totals disagree with the pair count";
        }
        return "";
    });

    // ----- canonical pairs round-trip through the invariants -----
    h.check("canonical-forms", []() -> std::string {
        for (const char* name : {"Z2+Z2", "Z3+Z3", "Z4+Z4", "Z2+Z2+Z2", "Z3+Z3+Z3"}) {
            FiniteGroup G = builtin_group(name);
            HomocyclicShape shape = homocyclic_shape(G);
            for (const CanonicalTriple& t : all_canonical_triples(shape.rank)) {
                EndoPair cp = canonical_pair(G, t);
                if (!is_idempotent(G, cp.left) || !is_idempotent(G, cp.right) ||
                    !commutes(G, cp.left, cp.right))
                    return std::string(name) + ": canonical pair is not a commuting idempotent";
                if (!(canonical_form(G, cp) == t))
                    return std::string(name) + ": invariants do not recover the triple";
                Diagonalization d = diagonalize_pair(G, cp);
                if (!(triple_from_diagonal(d) == t))
                    return std::string(name) + ": diagonalization changes the triple";
                if (!(conjugate_pair(G, d.w, cp) == cp))
                    return std::string(name) + ": canonical pair moved by its own diagonalizer";
            }
        }
        return "";
    });

    // ----- diagonalization on mixed-order abelian groups -----
    h.check("general-diagonalization", [&]() -> std::string {
        std::vector<std::string> names = {"Z4+Z2", "Z8+Z2", "Z12", "Z9+Z3", "Z2+Z2+Z3"};
        if (!quick) {
            names.push_back("Z18");
            names.push_back("Z4+Z4+Z2");
        }
        for (const std::string& name : names) {
            FiniteGroup G = builtin_group(name);
            DiagonalizeContext ctx = make_diagonalize_context(G);
            const int r = ctx.basis.rank();

            // A diagonalized pair is determined up to similarity by which
            // (coefficient, coefficient) label each summand order carries, so
            // the class count is the product over order multiplicities m of
            // C(m+3, 3) labels-with-repetition.
            std::map<int, int> order_mult;
            for (int o : ctx.basis.orders) ++order_mult[o];
            std::uint64_t expected_classes = 1;
            for (const auto& [o, m] : order_mult) {
                (void)o;
                expected_classes *= static_cast<std::uint64_t>(m + 1) * (m + 2) * (m + 3) / 6;
            }

            std::set<std::vector<std::array<int, 3>>> signatures;
            std::string bad;
            std::uint64_t seen = 0;
            for_each_associative_pair(G, [&](const EndoPair& p) {
                if (!bad.empty()) return;
                ++seen;
                Diagonalization d = diagonalize_pair(ctx, p);
                // External route: conjugate through the public pieces and
                // compare against projections rebuilt from the coefficients.
                EndoPair conj = conjugate_pair(G, d.w, p);
                for (int x = 0; x < G.n; ++x) {
                    int p1 = 0, p2 = 0;
                    for (int i = 0; i < r; ++i) {
                        if (d.diag1[i]) p1 = G.add(p1, ctx.mult[i][ctx.coords[x][i]]);
                        if (d.diag2[i]) p2 = G.add(p2, ctx.mult[i][ctx.coords[x][i]]);
                    }
                    if (conj.left.map[x] != p1 || conj.right.map[x] != p2) {
                        bad = name + ": conjugate is not the claimed projection pair";
                        return;
                    }
                }
                std::vector<std::array<int, 3>> sig(r);
                for (int i = 0; i < r; ++i)
                    sig[i] = {ctx.basis.orders[i], d.diag1[i], d.diag2[i]};
                std::sort(sig.begin(), sig.end());
                signatures.insert(std::move(sig));
            });
            if (!bad.empty()) return bad;
            if (seen != count_associative_pairs(G))
                return name + ": stream count disagrees with the counting route";
            const Classification c = classify_associative(G);
            if (c.counts.classes != signatures.size())
                return name + ": " + std::to_string(c.counts.classes) + " classes vs " +
                       std::to_string(signatures.size()) + " diagonal signatures";
            if (c.counts.classes != expected_classes)
                return name + ": " + std::to_string(c.counts.classes) + " classes vs " +
                       std::to_string(expected_classes) + " from the label count";
        }
        return "";
    });

    // ----- invariants are conjugation-invariant -----
    h.check("conjugation-invariance", []() -> std::string {
        for (const char* name : {"Z3+Z3", "Z4+Z4"}) {
            FiniteGroup G = builtin_group(name);
            std::vector<EndoPair> pairs;
            for_each_associative_pair(G, [&](const EndoPair& p) { pairs.push_back(p); });
            for (std::uint64_t seed = 1; seed <= 6; ++seed) {
                Endomorphism alpha = random_homocyclic_automorphism(G, seed);
                for (std::size_t i = 0; i < pairs.size(); i += 5) {
                    EndoPair moved = conjugate_pair(G, alpha, pairs[i]);
                    if (!(invariant_triple(G, moved) == invariant_triple(G, pairs[i])))
                        return std::string(name) + ": invariant changed under conjugation";
                }
            }
        }
        return "";
    });

    // ----- class-count bounds, tight on squarefree cyclic groups -----
    h.check("counting-bounds", [&]() -> std::string {
        for (int r = 0; r <= 4; ++r) {
            std::uint64_t formula = canonical_triple_count(r);
            std::uint64_t listed = all_canonical_triples(r).size();
            std::uint64_t closed = static_cast<std::uint64_t>(r + 1) * (r + 2) * (r + 3) / 6;
            if (formula != listed || formula != closed)
                return "triple count mismatch at rank " + std::to_string(r);
        }
        if (squarefree_witness_order(3) != 30 || squarefree_witness_order(4) != 210)
            return "squarefree witness orders are wrong";
        {
            FiniteGroup Z30 = builtin_group("Z30");
            Classification c = classify_associative(Z30);
            if (c.counts.classes != associative_class_bound(3))
                return "Z30: " + std::to_string(c.counts.classes) + " classes, bound " +
                       std::to_string(associative_class_bound(3));
            if (c.counts.band != band_class_bound(3))
                return "Z30: band classes " + std::to_string(c.counts.band) + ", bound " +
                       std::to_string(band_class_bound(3));
        }
        if (!quick) {
            FiniteGroup Z210 = builtin_group("Z210");
            Classification c = classify_associative(Z210);
            if (c.counts.classes != associative_class_bound(4))
                return "Z210: " + std::to_string(c.counts.classes) + " classes, bound " +
                       std::to_string(associative_class_bound(4));
            if (c.counts.band != band_class_bound(4))
                return "Z210: band classes " + std::to_string(c.counts.band);
        }
        // the bound is not tight on a non-squarefree group of equal rank
        FiniteGroup V = builtin_group("Z2+Z2");
        if (classify_associative(V).counts.classes >= associative_class_bound(2))
            return "Z2+Z2: bound unexpectedly attained";
        return "";
    });

    // ----- ideals vs the literal congruence oracle, quotients, maximality -----
    h.check("ideals-and-quotients", []() -> std::string {
        FiniteGroup V = builtin_group("Z2+Z2");
        Endomorphism d1{{0, 0, 2, 2}};
        InterchangeRing RV = build_from_pair(V, {d1, d1});
        std::vector<InterchangeRing> rings{RV};
        rings.push_back(build_from_pair(V, {zero_endo(V), zero_endo(V)}));
        rings.push_back(build_from_pair(V, {identity_endo(V), zero_endo(V)}));
        FiniteGroup S3 = builtin_group("S3");
        std::vector<Endomorphism> endS3 = enumerate_endomorphisms(S3);
        rings.push_back(build_from_pair(S3, {endS3[1], endS3[1]}));
        rings.push_back(build_from_pair(S3, {endS3[0], endS3[4]}));
        FiniteGroup Z6 = builtin_group("Z6");
        rings.push_back(build_from_pair(Z6, {Endomorphism{{0, 3, 0, 3, 0, 3}},
                                             Endomorphism{{0, 3, 0, 3, 0, 3}}}));
        for (const InterchangeRing& R : rings) {
            std::uint64_t whole = (1ull << R.group.n) - 1;
            std::vector<std::uint64_t> ideals = enumerate_ideal_masks(R);
            std::set<std::uint64_t> ideal_set(ideals.begin(), ideals.end());
            for (std::uint64_t m = 0; m <= whole; ++m) {
                bool lib = ideal_set.count(m) != 0;
                if (is_ideal(R, m) != lib) return R.group.name + ": ideal list inconsistent";
                if (lib != congruence_oracle(R, m))
                    return R.group.name + ": ideal route differs from the congruence oracle";
            }
            for (std::uint64_t m : ideals) {
                std::vector<int> cls;
                InterchangeRing Q = quotient_ring(R, m, &cls);
                if (cls[0] != 0) return R.group.name + ": coset of 0 is not class 0";
                if (m != whole && is_maximal_ideal_direct(R, m) !=
                                      is_maximal_ideal_via_quotient(R, m))
                    return R.group.name + ": maximality routes disagree";
            }
        }
        if (enumerate_ideal_masks(RV) !=
            std::vector<std::uint64_t>{0b0001, 0b0011, 0b0101, 0b1111})
            return "projection ring on Z2+Z2: wrong ideal list";
        return "";
    });

    // ----- matrix rings satisfy the law (checked by an independent sweep) -----
    h.check("matrix-rings", []() -> std::string {
        FiniteGroup Z2 = builtin_group("Z2");
        FiniteGroup Z4 = builtin_group("Z4");
        FiniteGroup V = builtin_group("Z2+Z2");
        std::vector<InterchangeRing> bases;
        bases.push_back(build_from_pair(Z2, {zero_endo(Z2), zero_endo(Z2)}));
        bases.push_back(build_from_pair(Z2, {identity_endo(Z2), identity_endo(Z2)}));
        bases.push_back(build_from_pair(Z4, {Endomorphism{{0, 2, 0, 2}}, identity_endo(Z4)}));
        bases.push_back(build_from_pair(V, {Endomorphism{{0, 0, 2, 2}}, identity_endo(V)}));
        for (const InterchangeRing& R : bases) {
            InterchangeRing M = matrix_ring(R, 2);
            std::size_t want = 1;
            for (int i = 0; i < 4; ++i) want *= R.group.n;
            if (static_cast<std::size_t>(M.group.n) != want)
                return R.group.name + ": matrix ring has the wrong order";
            if (M.group.n <= 16) {
                if (!brute_force_interchange_law(M.group, M.prod))
                    return R.group.name + ": matrix product violates the law";
            } else {
                // order-256 rings: literal law at 100k seeded quadruples
                const FiniteGroup& MG = M.group;
                for (std::size_t i = 0; i < 100'000; ++i) {
                    std::uint64_t bits = mix64(i ^ 0xabcdu);
                    std::array<int, 4> q{static_cast<int>(bits % MG.n),
                                         static_cast<int>((bits >> 16) % MG.n),
                                         static_cast<int>((bits >> 32) % MG.n),
                                         static_cast<int>((bits >> 48) % MG.n)};
                    if (law_violated_at(MG, M.prod, q))
                        return R.group.name + ": matrix product violates the law";
                }
            }
            if (!check_kfold_identity(M, 2))
                return R.group.name + ": matrix ring fails the 2-fold identity";
            // Third route: the complete law factored through one entry, which
            // covers every matrix quadruple including the order-256 rings.
            if (!matrix_law_entrywise(R, 2))
                return R.group.name + ": entrywise law sweep found a violation";
        }
        // The factored sweep must also reject a non-law base product.
        FiniteGroup Z5 = builtin_group("Z5");
        InterchangeRing bad;
        bad.group = Z5;
        bad.prod.assign(25, 0);
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) bad.prod[5 * x + y] = static_cast<elem_t>((x * y) % 5);
        if (matrix_law_entrywise(bad, 2))
            return "entrywise sweep accepted matrices over ordinary multiplication mod 5";
        return "";
    });

    // ----- workload guards refuse oversized jobs -----
    h.check("workload-caps", []() -> std::string {
        FiniteGroup big = make_abelian_group(AbelianSpec{{2, 2, 2, 2, 2, 2}});
        if (count_endomorphisms(big) != (1ull << 36))
            return "endomorphism count of the rank-6 elementary group is wrong";
        try {
            enumerate_endomorphisms(big);
            return "enumeration of 2^36 maps was not refused";
        } catch (const CapError&) {
        }
        try {
            classify_all_pairs(make_abelian_group(AbelianSpec{{3, 3, 3}}));
            return "classification of 3^18 pairs was not refused";
        } catch (const CapError&) {
        }
        try {
            make_abelian_group(AbelianSpec{{static_cast<int>(size_cap()) + 1}});
            return "a group above the size cap was not refused";
        } catch (const CapError&) {
        }
        return "";
    });

    out << (h.failures == 0 ? "VERIFY PASS" : "VERIFY FAIL") << " (" << h.passed << "/"
        << (h.passed + h.failures) << " checks)\n";
    return h.failures;
}

}  // namespace icr
