// Acceptance battery for the interchange-ring library.
//
// Eleven independent checks, each printed as one line:
//   [NN] PASS (time)  description
// The process exits nonzero if any check fails. Each check re-derives its
// expected values from definitions (exhaustive sweeps, closed-form counts,
// brute-force oracles) rather than trusting the code paths it exercises.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "icr/canonical.hpp"
#include "icr/classify.hpp"
#include "icr/endo.hpp"
#include "icr/group.hpp"
#include "icr/notation.hpp"
#include "icr/structures.hpp"

using namespace icr;

namespace {

struct CheckFailure {
    std::string message;
};

void req(bool cond, const std::string& message) {
    if (!cond) throw CheckFailure{message};
}

using Runner = std::string (*)();

// ---- shared helpers ---------------------------------------------------------

std::vector<EndoPair> image_commuting_pairs(const FiniteGroup& G) {
    auto endos = enumerate_endomorphisms(G);
    std::vector<EndoPair> out;
    for (const Endomorphism& f : endos)
        for (const Endomorphism& g : endos)
            if (is_image_commuting(G, f, g)) out.push_back({f, g});
    return out;
}

std::vector<elem_t> product_table(const FiniteGroup& G, const EndoPair& p) {
    std::vector<elem_t> t(static_cast<std::size_t>(G.n) * G.n);
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y)
            t[static_cast<std::size_t>(x) * G.n + y] =
                static_cast<elem_t>(G.add(p.left.map[x], p.right.map[y]));
    return t;
}

// Independent isomorphism oracle: does some additive automorphism carry the
// first product table onto the second?
bool brute_product_isomorphic(const FiniteGroup& G, const std::vector<Endomorphism>& autos,
                              const std::vector<elem_t>& a, const std::vector<elem_t>& b) {
    const int n = G.n;
    for (const Endomorphism& al : autos) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (al.map[a[static_cast<std::size_t>(x) * n + y]] !=
                    b[static_cast<std::size_t>(al.map[x]) * n + al.map[y]])
                    ok = false;
        if (ok) return true;
    }
    return false;
}

// Exhaustive n^3 associativity oracle on a product table.
bool brute_associative(const FiniteGroup& G, const std::vector<elem_t>& t) {
    const int n = G.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = t[static_cast<std::size_t>(x) * n + y];
            for (int z = 0; z < n; ++z)
                if (t[static_cast<std::size_t>(xy) * n + z] !=
                    t[static_cast<std::size_t>(x) * n +
                      t[static_cast<std::size_t>(y) * n + z]])
                    return false;
        }
    return true;
}

FiniteGroup homocyclic_group(int p, int exp, int rank) {
    AbelianSpec spec;
    int q = 1;
    for (int i = 0; i < exp; ++i) q *= p;
    for (int i = 0; i < rank; ++i) spec.factors.push_back(q);
    return make_abelian_group(spec);
}

std::uint64_t binom3(std::uint64_t m) { return (m + 1) * (m + 2) * (m + 3) / 6; }

// Expected number of coefficient-signature classes on an abelian group: the
// product over distinct summand orders of C(m+3,3) where m is the order's
// multiplicity.
std::uint64_t signature_class_count(const PpcBasis& basis) {
    std::map<int, std::uint64_t> mult;
    for (int o : basis.orders) ++mult[o];
    std::uint64_t total = 1;
    for (const auto& [o, m] : mult) total *= binom3(m);
    return total;
}

std::string human_count(std::uint64_t v) {
    char buf[32];
    if (v >= 10'000'000) {
        std::snprintf(buf, sizeof buf, "%.1fM", static_cast<double>(v) / 1e6);
        return buf;
    }
    return std::to_string(v);
}

// ---- criterion bodies -------------------------------------------------------

std::string check_01_endomorphism_monoid() {
    FiniteGroup S3 = builtin_group("S3");
    auto endos = enumerate_endomorphisms(S3);
    const char* want[] = {"(000000)", "(000333)", "(000444)", "(000555)", "(012345)",
                          "(012453)", "(012534)", "(021354)", "(021435)", "(021543)"};
    req(endos.size() == 10, "S3 must have exactly 10 endomorphisms");
    for (int i = 0; i < 10; ++i)
        req(format_endo(endos[i]) == want[i],
            "endomorphism " + std::to_string(i) + " is " + format_endo(endos[i]) +
                ", expected " + want[i]);
    req(brute_force_endomorphisms(S3) == endos,
        "depth-first map search disagrees with the enumerator");
    auto autos = enumerate_automorphisms(S3);
    req(autos.size() == 6, "S3 must have exactly 6 automorphisms");
    for (const Endomorphism& a : autos)
        req(is_automorphism(S3, a), "listed automorphism fails the bijectivity check");
    return "10 endomorphisms (exact list), 6 automorphisms, brute-force agreement";
}

std::string check_02_s3_classification() {
    FiniteGroup S3 = builtin_group("S3");
    Classification all = classify_all_pairs(S3);
    req(all.counts.pairs == 22, "S3 carries 22 ring products");
    req(all.counts.classes == 10, "S3 products fall into 10 isomorphism classes");
    auto endos = enumerate_endomorphisms(S3);
    std::set<std::pair<int, int>> reps;
    for (const Orbit& o : all.orbits)
        reps.insert({endo_index(endos, o.rep.left), endo_index(endos, o.rep.right)});
    std::set<std::pair<int, int>> want = {{0, 0}, {0, 1}, {0, 4}, {0, 5}, {0, 7},
                                          {1, 0}, {1, 1}, {4, 0}, {5, 0}, {7, 0}};
    req(reps == want, "the ten class representatives differ from the stored list");
    Classification assoc = classify_associative(S3);
    req(assoc.counts.pairs == 12, "S3 carries 12 associative products");
    req(assoc.counts.classes == 6, "S3 associative products fall into 6 classes");
    return "22 products in 10 classes, 12 associative products in 6 classes";
}

std::string check_03_cyclic_six() {
    FiniteGroup Z6 = builtin_group("Z6");
    Classification assoc = classify_associative(Z6);
    req(assoc.counts.classes == 16, "Z6 has 16 associative classes");
    req(assoc.counts.commutative_associative == 4, "Z6 has 4 commutative associative classes");
    req(assoc.counts.band == 4, "Z6 has 4 band classes");
    Classification all = classify_all_pairs(Z6);
    req(all.counts.pairs == 36 && all.counts.classes == 36,
        "on a cyclic group every product is its own class");
    for (const Orbit& o : all.orbits)
        req(o.members.size() == 1, "found a non-singleton orbit on Z6");
    return "16 associative classes (4 commutative, 4 bands); all 36 orbits singletons";
}

std::string check_04_order_six_census() {
    OrderCorpus corpus = groups_of_order(6);
    req(corpus.complete, "the order-6 catalogue must be complete");
    req(corpus.groups.size() == 2, "there are exactly two groups of order 6");
    std::uint64_t total = 0;
    for (const FiniteGroup& G : corpus.groups) total += classify_associative(G).counts.classes;
    req(total == 22, "order-6 census: expected 22 associative classes, got " +
                         std::to_string(total));
    return "both order-6 groups: 16 + 6 = 22 associative classes";
}

std::string check_05_klein_classes() {
    FiniteGroup V = builtin_group("Z2+Z2");
    Classification assoc = classify_associative(V);
    req(assoc.counts.classes == 10, "the Klein group has 10 associative classes");
    req(canonical_triple_count(2) == 10, "closed form (r+1)(r+2)(r+3)/6 at r=2 is 10");
    req(assoc.counts.essential == 4, "all four degenerate products appear as classes");

    // the four degenerate pairs are representatives (each fixed by all of Aut)
    Endomorphism z = zero_endo(V), id = identity_endo(V);
    auto has_rep = [&](const EndoPair& p) {
        for (const Orbit& o : assoc.orbits)
            if (o.rep == p) return true;
        return false;
    };
    req(has_rep({z, z}) && has_rep({id, z}) && has_rep({z, id}) && has_rep({id, id}),
        "a degenerate product is missing from the representative list");

    // the mixed projection pair: present, and BOTH coordinate orders of it
    // land in the same class (the coordinate swap conjugates one to the other)
    EndoPair d12 = parse_pair(V, "(0022),(0101)");
    EndoPair d21 = parse_pair(V, "(0101),(0022)");
    auto autos = enumerate_automorphisms(V);
    req(similar_pairs(V, autos, d12, d21),
        "the two coordinate orders of the projection pair must be conjugate");
    const Orbit* home = nullptr;
    for (const Orbit& o : assoc.orbits)
        if (std::binary_search(o.members.begin(), o.members.end(), d12)) home = &o;
    req(home != nullptr, "the projection pair is missing from the orbit partition");
    req(std::binary_search(home->members.begin(), home->members.end(), d21),
        "the swapped projection pair fell into a different orbit");
    return "10 classes = closed form; 4 degenerate reps; both orders of the projection "
           "pair are one class (swap conjugation), corrected from older tabulations";
}

const std::tuple<int, int, int> kHomocyclicSets[] = {
    {2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {3, 1, 1}, {3, 1, 2}, {2, 2, 1}, {2, 2, 2}};

std::string check_06_orbit_count_formula() {
    for (const auto& [p, n, r] : kHomocyclicSets) {
        FiniteGroup G = homocyclic_group(p, n, r);
        std::uint64_t classes = classify_associative(G).counts.classes;
        std::uint64_t want = canonical_triple_count(r);
        req(classes == want, G.name + ": " + std::to_string(classes) +
                                 " associative classes, formula says " + std::to_string(want));
    }
    return "orbit counts match (r+1)(r+2)(r+3)/6 on all seven prime-power parameter sets";
}

std::string check_07_bound_tightness() {
    FiniteGroup Z30 = builtin_group("Z30");
    Classification assoc = classify_associative(Z30);
    req(assoc.counts.classes == 64, "Z30 attains the 4^3 associative bound");
    req(associative_class_bound(3) == 64, "associative bound at rank 3 is 4^3");
    req(assoc.counts.band == 8, "Z30 attains the 2^3 band bound");
    req(band_class_bound(3) == 8, "band bound at rank 3 is 2^3");
    return "Z30: 64 = 4^3 associative classes and 8 = 2^3 band classes, both bounds tight";
}

std::string check_08_commutative_associative() {
    for (const auto& [p, n, r] : kHomocyclicSets) {
        FiniteGroup G = homocyclic_group(p, n, r);
        std::uint64_t cnt = classify_associative(G).counts.commutative_associative;
        req(cnt == static_cast<std::uint64_t>(r) + 1,
            G.name + ": " + std::to_string(cnt) +
                " commutative associative classes, expected r+1 = " + std::to_string(r + 1));
    }
    return "commutative-associative class count equals r+1 on all seven parameter sets";
}

std::string check_09_oracle_suite() {
    std::uint64_t rings = 0, sim_checks = 0;
    int group_count = 0;
    for (int k = 1; k <= 8; ++k) {
        OrderCorpus corpus = groups_of_order(k);
        req(corpus.complete, "order " + std::to_string(k) + " catalogue must be complete");
        for (const FiniteGroup& G : corpus.groups) {
            ++group_count;
            auto autos = enumerate_automorphisms(G);
            auto pairs = image_commuting_pairs(G);

            // (a) the pair <-> ring correspondence round-trips, (b) structural
            // properties match exhaustive table sweeps, (d) the defining
            // identities hold in every built ring
            for (const EndoPair& p : pairs) {
                InterchangeRing R = build_from_pair(G, p, false);
                req(extract_pair(R) == p, G.name + ": build/extract round trip failed");
                req(check_interchange_law(G, R.prod).ok,
                    G.name + ": built table violates the defining law");
                RingProperties sp = pair_properties(G, p);
                RingProperties op = magma_properties_oracle(R);
                req(sp.associative == brute_associative(G, R.prod),
                    G.name + ": structural associativity disagrees with the triple sweep");
                req(sp.commutative == op.commutative && sp.associative == op.associative &&
                        sp.idempotent_product == op.idempotent_product && sp.band == op.band &&
                        sp.proper == op.proper && sp.zero_semigroup == op.zero_semigroup &&
                        sp.essential == op.essential,
                    G.name + ": structural properties disagree with the table oracle");
                req(check_basic_identities(R),
                    G.name + ": a universal identity fails in a built ring");
                ++rings;
            }

            // (c) similarity coincides with brute-force isomorphism search
            if (pairs.size() <= 1300) {
                std::vector<std::vector<elem_t>> tabs;
                tabs.reserve(pairs.size());
                for (const EndoPair& p : pairs) tabs.push_back(product_table(G, p));
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    for (std::size_t j = 0; j < pairs.size(); ++j) {
                        bool sim = similar_pairs(G, autos, pairs[i], pairs[j]);
                        bool iso = brute_product_isomorphic(G, autos, tabs[i], tabs[j]);
                        req(sim == iso, G.name + ": similarity and brute isomorphism " +
                                            "disagree on a pair of products");
                        ++sim_checks;
                    }
            } else {
                // 262144 products: complete proof via the orbit partition.
                // Distinct representatives are pairwise non-isomorphic by
                // exhaustive automorphism search, and every product reaches
                // its representative through an explicit witness; together
                // these decide isomorphism for every ordered pair of products.
                Classification all = classify_all_pairs(G);
                std::vector<std::vector<elem_t>> reps;
                reps.reserve(all.orbits.size());
                for (const Orbit& o : all.orbits) reps.push_back(product_table(G, o.rep));
                for (std::size_t i = 0; i < reps.size(); ++i)
                    for (std::size_t j = 0; j < reps.size(); ++j) {
                        if (i == j) continue;
                        req(!brute_product_isomorphic(G, autos, reps[i], reps[j]),
                            G.name + ": two distinct representatives are isomorphic");
                        ++sim_checks;
                    }
                std::uint64_t covered = 0;
                for (std::size_t i = 0; i < all.orbits.size(); ++i)
                    for (const EndoPair& m : all.orbits[i].members) {
                        std::vector<elem_t> tm = product_table(G, m);
                        req(brute_product_isomorphic(G, autos, reps[i], tm),
                            G.name + ": an orbit member has no isomorphism witness");
                        ++sim_checks;
                        ++covered;
                    }
                req(covered == all.counts.pairs, G.name + ": orbit partition lost products");
            }
        }
    }
    return std::to_string(group_count) + " groups, " + human_count(rings) +
           " rings oracle-checked; " + human_count(sim_checks) +
           " isomorphism decisions (rank-3 group over F2 via representative "
           "disjointness + per-member witnesses)";
}

std::string check_10_diagonalization() {
    std::uint64_t swept_groups = 0, swept_pairs = 0;
    std::vector<std::string> rep_route;

    // Exhaustively diagonalize groups whose pair count fits the streaming
    // budget and whose endomorphism monoid is enumerable; cover the rest by
    // canonical representatives plus seeded conjugates (every orbit contains
    // a representative, so the per-pair validation inside diagonalize_pair
    // still sees each class).
    auto sweep_group = [&](const FiniteGroup& G) {
        DiagonalizeContext ctx = make_diagonalize_context(G);
        std::uint64_t cnt;
        if (ctx.homocyclic) {
            cnt = total_associative_pairs_formula(ctx.shape);
            // subgroup-lattice count and closed form: two independent routes
            if (G.n <= 64)
                req(count_associative_pairs(G) == cnt,
                    G.name + ": lattice count disagrees with the closed form");
        } else {
            cnt = count_associative_pairs(G);  // mixed groups all have n <= 64
        }
        bool streamable = cnt <= kPairStreamLimit &&
                          (G.n <= 64 || count_endomorphisms(G) <= kEndoEnumLimit);
        if (streamable) {
            std::map<CanonicalTriple, std::uint64_t> buckets;
            std::set<std::vector<std::tuple<int, int, int>>> signatures;
            std::uint64_t seen = 0;
            for_each_associative_pair(G, [&](const EndoPair& p) {
                Diagonalization d = diagonalize_pair(ctx, p);
                if (ctx.homocyclic) {
                    CanonicalTriple t = triple_from_diagonal(d);
                    req(t == invariant_triple(G, ctx.shape, p),
                        G.name + ": block route and invariant route disagree");
                    ++buckets[t];
                } else {
                    std::vector<std::tuple<int, int, int>> sig;
                    for (std::size_t i = 0; i < ctx.basis.orders.size(); ++i)
                        sig.emplace_back(ctx.basis.orders[i], d.diag1[i], d.diag2[i]);
                    std::sort(sig.begin(), sig.end());
                    signatures.insert(std::move(sig));
                }
                ++seen;
            });
            req(seen == cnt, G.name + ": stream count mismatch");
            if (ctx.homocyclic) {
                HomocyclicShape sh = ctx.shape;
                req(buckets.size() == canonical_triple_count(sh.rank),
                    G.name + ": some label bucket is empty");
                for (const auto& [t, size] : buckets)
                    req(size == bucket_size_formula(sh, t),
                        G.name + ": bucket " + format_triple(t) +
                            " does not match the orbit-size formula");
            } else {
                req(signatures.size() == signature_class_count(ctx.basis),
                    G.name + ": signature class count differs from the closed form");
            }
            ++swept_groups;
            swept_pairs += seen;
        } else {
            // representative route: every canonical pair plus seeded conjugates
            req(ctx.homocyclic, G.name + ": only homocyclic groups may skip the sweep");
            HomocyclicShape sh = ctx.shape;
            auto triples = all_canonical_triples(sh.rank);
            for (std::size_t ti = 0; ti < triples.size(); ++ti) {
                const CanonicalTriple& t = triples[ti];
                EndoPair cp = canonical_pair(G, t);
                Diagonalization d = diagonalize_pair(ctx, cp);
                req(triple_from_diagonal(d) == t, G.name + ": canonical pair of " +
                                                      format_triple(t) + " mislabeled");
                for (std::uint64_t seed = 0; seed < 20; ++seed) {
                    Endomorphism al =
                        random_homocyclic_automorphism(G, seed * 1000 + ti + 1);
                    EndoPair moved = conjugate_pair(G, al, cp);
                    Diagonalization dm = diagonalize_pair(ctx, moved);
                    req(triple_from_diagonal(dm) == t,
                        G.name + ": conjugate of " + format_triple(t) + " relabeled");
                    req(invariant_triple(G, sh, moved) == t,
                        G.name + ": invariant route relabeled a conjugate");
                }
            }
            rep_route.push_back(G.name);
        }
    };

    // first part: every abelian group of order <= 64
    for (int k = 1; k <= 64; ++k)
        for (const FiniteGroup& G : abelian_groups_of_order(k)) sweep_group(G);

    // second part: the remaining homocyclic groups within the size cap
    for (int k = 65; k <= kDefaultSizeCap; ++k)
        for (const FiniteGroup& G : abelian_groups_of_order(k))
            if (is_homocyclic(G)) sweep_group(G);

    // third part: literal orbit closure pins each label to exactly one orbit
    const std::tuple<int, int, int> closure_sets[] = {
        {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {3, 1, 2}, {3, 1, 3},
        {5, 1, 2}, {7, 1, 2}, {11, 1, 2}, {13, 1, 2}, {2, 2, 2},
        {2, 2, 3}, {3, 2, 2}, {2, 3, 2}, {2, 4, 2}};
    for (const auto& [p, n, r] : closure_sets) {
        FiniteGroup G = homocyclic_group(p, n, r);
        HomocyclicShape sh = homocyclic_shape(G);
        Classification assoc = classify_associative(G);
        req(assoc.counts.classes == canonical_triple_count(r),
            G.name + ": class count differs from the label count");
        std::set<CanonicalTriple> labels;
        for (const Orbit& o : assoc.orbits) {
            CanonicalTriple t = canonical_form(G, o.rep);
            req(labels.insert(t).second,
                G.name + ": two distinct orbits share the label " + format_triple(t));
            req(o.members.size() == bucket_size_formula(sh, t),
                G.name + ": orbit size of " + format_triple(t) + " is off the formula");
            for (const EndoPair& m : o.members)
                req(invariant_triple(G, sh, m) == t,
                    G.name + ": a member of the " + format_triple(t) + " orbit is mislabeled");
        }
    }

    std::string note = std::to_string(swept_groups) + " groups swept exhaustively (" +
                       human_count(swept_pairs) + " pairs); representatives + seeded "
                       "conjugates for";
    for (const std::string& name : rep_route) note += " " + name;
    note += "; 14 orbit-closure sets label-injective";
    return note;
}

std::string check_11_quotients_and_matrices() {
    // every ideal of every ring on every group of order <= 8
    std::uint64_t rings = 0, ideal_count = 0, congruence_masks = 0;
    for (int k = 1; k <= 8; ++k) {
        OrderCorpus corpus = groups_of_order(k);
        for (const FiniteGroup& G : corpus.groups) {
            const int n = G.n;
            const std::uint64_t full_mask = (n == 64) ? ~0ull : (1ull << n) - 1;
            std::vector<std::uint64_t> normal_masks;
            for (std::uint64_t mask : enumerate_subgroup_masks(G))
                if (is_normal_subgroup(G, mask)) normal_masks.push_back(mask);

            auto pairs = image_commuting_pairs(G);
            for (const EndoPair& p : pairs) {
                InterchangeRing R = build_from_pair(G, p, false);
                ++rings;
                // the ideal test coincides with the literal congruence
                // condition (x+i)*(y+j) = x*y mod I on every normal subgroup
                for (std::uint64_t mask : normal_masks) {
                    bool ideal = is_ideal(R, mask);
                    if (mask == 1 || mask == full_mask) {
                        req(ideal, G.name + ": a trivial ideal was rejected");
                        ++congruence_masks;
                        continue;
                    }
                    std::vector<int> members;
                    for (int e = 0; e < n; ++e)
                        if ((mask >> e) & 1) members.push_back(e);
                    bool congruent = true;
                    for (int x = 0; x < n && congruent; ++x)
                        for (int y = 0; y < n && congruent; ++y) {
                            int base = R.mul(x, y);
                            for (int i : members) {
                                int xi = G.add(x, i);
                                for (int j : members)
                                    if (!((mask >> G.sub(R.mul(xi, G.add(y, j)), base)) & 1)) {
                                        congruent = false;
                                        break;
                                    }
                                if (!congruent) break;
                            }
                        }
                    req(ideal == congruent,
                        G.name + ": ideal test and congruence sweep disagree on " +
                            format_mask(mask));
                    ++congruence_masks;
                }
            }

            // quotient construction is validated on every class representative
            Classification all = classify_all_pairs(G);
            for (const Orbit& o : all.orbits) {
                InterchangeRing R = build_from_pair(G, o.rep, false);
                for (std::uint64_t mask : enumerate_ideal_masks(R)) {
                    std::vector<int> cls;
                    InterchangeRing Q = quotient_ring(R, mask, &cls);
                    req(check_interchange_law(Q.group, Q.prod).ok,
                        G.name + ": a quotient violates the defining law");
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y) {
                            req(cls[G.add(x, y)] == Q.group.add(cls[x], cls[y]),
                                G.name + ": quotient addition is not the coset addition");
                            req(cls[R.mul(x, y)] == Q.mul(cls[x], cls[y]),
                                G.name + ": quotient product is not the coset product");
                        }
                    ++ideal_count;
                }
            }
        }
    }

    // matrix rings over every ring class with at most 4 elements
    std::uint64_t matrix_reps = 0;
    for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z2+Z2"}) {
        FiniteGroup G = builtin_group(name);
        Classification all = classify_all_pairs(G);
        for (const Orbit& o : all.orbits) {
            InterchangeRing R = build_from_pair(G, o.rep, false);
            InterchangeRing M = matrix_ring(R, 2);  // validates its own table
            req(M.group.n == G.n * G.n * G.n * G.n, "matrix ring has the wrong order");
            req(matrix_law_entrywise(R, 2),
                std::string(name) + ": entrywise law sweep failed for a 2x2 matrix ring");
            if (G.n <= 3)
                req(brute_force_interchange_law(M.group, M.prod),
                    std::string(name) + ": literal quadruple sweep failed on a matrix ring");
            ++matrix_reps;
        }
    }
    req(matrix_reps == 86, "expected 86 base ring classes with at most 4 elements");

    return human_count(rings) + " rings x " + "normal subgroups (" +
           human_count(congruence_masks) + " congruence sweeps agree with the ideal test), " +
           std::to_string(ideal_count) + " quotients rebuilt and rechecked, 86 matrix rings " +
           "law-checked over every entry assignment";
}

struct Criterion {
    int id;
    const char* title;
    Runner run;
    double budget_seconds;  // 0 = unbounded
};

const Criterion kCriteria[] = {
    {1, "endomorphism monoid of the smallest nonabelian group", check_01_endomorphism_monoid, 1.0},
    {2, "classification on the smallest nonabelian group", check_02_s3_classification, 1.0},
    {3, "classification on the cyclic group of order six", check_03_cyclic_six, 1.0},
    {4, "associative census at order six", check_04_order_six_census, 1.0},
    {5, "associative classes on the Klein four-group", check_05_klein_classes, 1.0},
    {6, "orbit-count formula on seven homocyclic groups", check_06_orbit_count_formula, 60.0},
    {7, "tightness of the class-count bounds on Z30", check_07_bound_tightness, 120.0},
    {8, "commutative-associative classes count r+1", check_08_commutative_associative, 60.0},
    {9, "oracle equivalence on all fourteen groups of order <= 8", check_09_oracle_suite, 300.0},
    {10, "diagonalization across the abelian catalogue", check_10_diagonalization, 0.0},
    {11, "quotients by every ideal and matrix rings", check_11_quotients_and_matrices, 0.0},
};

}  // namespace

int main() {
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string note;
        bool pass = true;
        try {
            note = c.run();
        } catch (const CheckFailure& f) {
            pass = false;
            note = f.message;
        } catch (const std::exception& e) {
            pass = false;
            note = std::string("unexpected error: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
            pass = false;
            note = "exceeded the " + std::to_string(c.budget_seconds) + " s budget";
        }
        std::printf("[%02d] %s (%7.2f s) %s: %s\n", c.id, pass ? "PASS" : "FAIL", secs,
                    c.title, note.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) std::printf("ACCEPTANCE FAIL: %d of 11 criteria failed\n", failures);
    else std::printf("ACCEPTANCE PASS: 11 of 11 criteria\n");
    return failures ? 1 : 0;
}
