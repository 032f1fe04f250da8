#include "icr/endo.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace icr {

namespace {

int multiple(const FiniteGroup& G, int x, int k) {
    int acc = 0;
    for (int i = 0; i < k; ++i) acc = G.add(acc, x);
    return acc;
}

void sort_and_check_unique(std::vector<Endomorphism>& v, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw InternalCheckError(std::string("duplicate entries in ") + what);
}

// Smallest generating set found greedily: repeatedly adjoin the least element
// outside the current span.
std::vector<int> greedy_generators(const FiniteGroup& G) {
    std::vector<std::uint8_t> span(G.n, 0);
    span[0] = 1;
    std::vector<int> span_list{0}, gens;
    while (static_cast<int>(span_list.size()) < G.n) {
        int g = 1;
        while (span[g]) ++g;
        gens.push_back(g);
        // Close span over the new generator (worklist; group may be nonabelian).
        span[g] = 1;
        span_list.push_back(g);
        for (std::size_t i = 0; i < span_list.size(); ++i)
            for (std::size_t j = 0; j < span_list.size(); ++j) {
                const int s = G.add(span_list[i], span_list[j]);
                if (!span[s]) {
                    span[s] = 1;
                    span_list.push_back(s);
                }
            }
    }
    return gens;
}

std::vector<Endomorphism> enumerate_endos_abelian(const FiniteGroup& G) {
    const PpcBasis basis = ppc_decompose(G);
    const int r = basis.rank();
    const auto coords = coordinate_table(G, basis);

    // Images of basis element i may be any y whose order divides orders[i].
    std::vector<std::vector<int>> cands(r);
    std::uint64_t total = 1;
    for (int i = 0; i < r; ++i) {
        for (int y = 0; y < G.n; ++y)
            if (multiple(G, y, basis.orders[i]) == 0) cands[i].push_back(y);
        total *= cands[i].size();
        if (total > kEndoEnumLimit)
            throw CapError("endomorphism count of " + G.name + " exceeds enumeration limit " +
                           std::to_string(kEndoEnumLimit));
    }

    std::vector<Endomorphism> out;
    out.reserve(total);
    std::vector<std::size_t> idx(r, 0);
    std::vector<std::vector<int>> im_mult(r);
    while (true) {
        for (int i = 0; i < r; ++i) {
            const int y = cands[i][idx[i]];
            im_mult[i].assign(basis.orders[i], 0);
            for (int c = 1; c < basis.orders[i]; ++c)
                im_mult[i][c] = G.add(im_mult[i][c - 1], y);
        }
        Endomorphism f;
        f.map.resize(G.n);
        for (int x = 0; x < G.n; ++x) {
            int v = 0;
            for (int i = 0; i < r; ++i) v = G.add(v, im_mult[i][coords[x][i]]);
            f.map[x] = static_cast<elem_t>(v);
        }
        out.push_back(std::move(f));

        int i = r - 1;
        while (i >= 0 && idx[i] + 1 == cands[i].size()) { idx[i] = 0; --i; }
        if (i < 0) break;
        ++idx[i];
    }
    sort_and_check_unique(out, "endomorphism enumeration");
    return out;
}

std::vector<Endomorphism> enumerate_endos_generic(const FiniteGroup& G) {
    const std::vector<int> gens = greedy_generators(G);
    const int k = static_cast<int>(gens.size());

    std::uint64_t tuples = 1;
    for (int i = 0; i < k; ++i) {
        tuples *= static_cast<std::uint64_t>(G.n);
        if (tuples > kEndoEnumLimit)
            throw CapError("endomorphism search space of " + G.name +
                           " exceeds enumeration limit " + std::to_string(kEndoEnumLimit));
    }

    // Breadth-first spanning edges: element y first reached as x + gens[j].
    struct Edge { int y, x, j; };
    std::vector<Edge> edges;
    {
        std::vector<std::uint8_t> seen(G.n, 0);
        seen[0] = 1;
        std::vector<int> queue{0};
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (int j = 0; j < k; ++j) {
                const int y = G.add(queue[q], gens[j]);
                if (!seen[y]) {
                    seen[y] = 1;
                    edges.push_back({y, queue[q], j});
                    queue.push_back(y);
                }
            }
    }

    std::vector<Endomorphism> out;
    std::vector<int> im(k, 0);
    std::vector<elem_t> map(G.n);
    while (true) {
        map[0] = 0;
        for (const Edge& e : edges) map[e.y] = static_cast<elem_t>(G.add(map[e.x], im[e.j]));
        if (is_endomorphism(G, map)) out.push_back(Endomorphism{map});

        int i = k - 1;
        while (i >= 0 && im[i] + 1 == G.n) { im[i] = 0; --i; }
        if (i < 0) break;
        ++im[i];
    }
    sort_and_check_unique(out, "endomorphism enumeration");
    return out;
}

}  // namespace

Endomorphism identity_endo(const FiniteGroup& G) {
    Endomorphism f;
    f.map.resize(G.n);
    for (int x = 0; x < G.n; ++x) f.map[x] = static_cast<elem_t>(x);
    return f;
}

Endomorphism zero_endo(const FiniteGroup& G) {
    Endomorphism f;
    f.map.assign(G.n, 0);
    return f;
}

bool is_endomorphism(const FiniteGroup& G, const std::vector<elem_t>& map) {
    if (static_cast<int>(map.size()) != G.n) return false;
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y)
            if (map[G.add(x, y)] != G.add(map[x], map[y])) return false;
    return true;
}

Endomorphism compose(const FiniteGroup& G, const Endomorphism& f, const Endomorphism& g) {
    Endomorphism out;
    out.map.resize(G.n);
    for (int x = 0; x < G.n; ++x) out.map[x] = f.map[g.map[x]];
    return out;
}

bool is_bijective(const Endomorphism& f) {
    std::vector<char> seen(f.map.size(), 0);
    for (elem_t v : f.map) {
        if (v >= f.map.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool is_automorphism(const FiniteGroup& G, const Endomorphism& f) {
    return is_bijective(f) && is_endomorphism(G, f.map);
}

Endomorphism inverse_automorphism(const FiniteGroup& G, const Endomorphism& alpha) {
    if (!is_bijective(alpha))
        throw ValidationError("cannot invert a non-bijective endomorphism");
    Endomorphism inv;
    inv.map.resize(G.n);
    for (int x = 0; x < G.n; ++x) inv.map[alpha.map[x]] = static_cast<elem_t>(x);
    return inv;
}

Endomorphism conjugate(const FiniteGroup& G, const Endomorphism& alpha, const Endomorphism& f) {
    const Endomorphism inv = inverse_automorphism(G, alpha);
    Endomorphism out;
    out.map.resize(G.n);
    for (int x = 0; x < G.n; ++x) out.map[x] = alpha.map[f.map[inv.map[x]]];
    return out;
}

EndoPair conjugate_pair(const FiniteGroup& G, const Endomorphism& alpha, const EndoPair& pr) {
    const Endomorphism inv = inverse_automorphism(G, alpha);
    EndoPair out;
    out.left.map.resize(G.n);
    out.right.map.resize(G.n);
    for (int x = 0; x < G.n; ++x) {
        const int xi = inv.map[x];
        out.left.map[x] = alpha.map[pr.left.map[xi]];
        out.right.map[x] = alpha.map[pr.right.map[xi]];
    }
    return out;
}

bool is_idempotent(const FiniteGroup& G, const Endomorphism& f) {
    (void)G;
    for (std::size_t x = 0; x < f.map.size(); ++x)
        if (f.map[f.map[x]] != f.map[x]) return false;
    return true;
}

bool commutes(const FiniteGroup& G, const Endomorphism& f, const Endomorphism& g) {
    (void)G;
    for (std::size_t x = 0; x < f.map.size(); ++x)
        if (f.map[g.map[x]] != g.map[f.map[x]]) return false;
    return true;
}

bool is_image_commuting(const FiniteGroup& G, const Endomorphism& f, const Endomorphism& g,
                        std::pair<int, int>* witness) {
    if (G.abelian) return true;
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y)
            if (G.add(f.map[x], g.map[y]) != G.add(g.map[y], f.map[x])) {
                if (witness) *witness = {x, y};
                return false;
            }
    return true;
}

std::uint64_t count_endomorphisms(const FiniteGroup& G) {
    if (G.abelian) {
        const PpcBasis basis = ppc_decompose(G);
        unsigned __int128 prod = 1;
        for (int oi : basis.orders)
            for (int oj : basis.orders) {
                prod *= static_cast<unsigned>(std::gcd(oi, oj));
                if (prod > static_cast<unsigned __int128>(UINT64_MAX))
                    throw CapError("endomorphism count of " + G.name + " exceeds 64-bit range");
            }
        return static_cast<std::uint64_t>(prod);
    }
    return enumerate_endomorphisms(G).size();
}

std::vector<Endomorphism> enumerate_endomorphisms(const FiniteGroup& G) {
    return G.abelian ? enumerate_endos_abelian(G) : enumerate_endos_generic(G);
}

std::vector<Endomorphism> brute_force_endomorphisms(const FiniteGroup& G) {
    if (G.n > 8) throw CapError("brute-force endomorphism search requires order <= 8");
    std::vector<Endomorphism> out;
    std::vector<elem_t> map(G.n, 0);

    auto rec = [&](auto&& self, int k) -> void {
        if (k == G.n) {
            out.push_back(Endomorphism{map});
            return;
        }
        for (int v = 0; v < G.n; ++v) {
            map[k] = static_cast<elem_t>(v);
            bool ok = true;
            for (int a = 0; a <= k && ok; ++a)
                for (int b = 0; b <= k && ok; ++b) {
                    const int c = G.add(a, b);
                    if (c > k || (a != k && b != k && c != k)) continue;
                    if (map[c] != G.add(map[a], map[b])) ok = false;
                }
            if (ok) self(self, k + 1);
        }
    };
    rec(rec, 1);  // map[0] = 0 is forced for any homomorphism
    return out;
}

std::vector<Endomorphism> enumerate_automorphisms(const FiniteGroup& G) {
    std::vector<Endomorphism> out;
    for (const Endomorphism& f : enumerate_endomorphisms(G))
        if (is_bijective(f)) out.push_back(f);
    return out;
}

int endo_index(const std::vector<Endomorphism>& sorted, const Endomorphism& f) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
    if (it == sorted.end() || !(*it == f)) return -1;
    return static_cast<int>(it - sorted.begin());
}

namespace {

// All (image, kernel) subgroup-mask pairs decomposing the subgroup `whole`.
std::vector<SubgroupPair> pairs_within(const std::vector<std::uint64_t>& masks,
                                       std::uint64_t whole) {
    std::vector<SubgroupPair> out;
    const int total = std::popcount(whole);
    std::vector<std::uint64_t> inside;
    for (std::uint64_t m : masks)
        if ((m & ~whole) == 0) inside.push_back(m);
    for (std::uint64_t a : inside)
        for (std::uint64_t b : inside)
            if ((a & b) == 1 && std::popcount(a) * std::popcount(b) == total)
                out.push_back({a, b});
    return out;
}

}  // namespace

std::vector<SubgroupPair> complementary_pairs(const FiniteGroup& G) {
    if (!G.abelian)
        throw ValidationError("complementary-subgroup enumeration requires an abelian group");
    const auto masks = enumerate_subgroup_masks(G);  // throws CapError when n > 64
    const std::uint64_t whole = G.n == 64 ? ~0ull : (1ull << G.n) - 1;
    return pairs_within(masks, whole);
}

Endomorphism projection_endo(const FiniteGroup& G, std::uint64_t image_mask,
                             std::uint64_t kernel_mask) {
    const auto ps = mask_elements(image_mask);
    const auto qs = mask_elements(kernel_mask);
    if (static_cast<int>(ps.size() * qs.size()) != G.n)
        throw ValidationError("image and kernel sizes do not multiply to the group order");
    Endomorphism f;
    f.map.assign(G.n, 0);
    std::vector<char> seen(G.n, 0);
    for (int p : ps)
        for (int q : qs) {
            const int x = G.add(p, q);
            if (seen[x]) throw ValidationError("image and kernel do not decompose the group");
            seen[x] = 1;
            f.map[x] = static_cast<elem_t>(p);
        }
    return f;
}

std::vector<Endomorphism> enumerate_idempotents(const FiniteGroup& G) {
    std::vector<Endomorphism> out;
    if (G.abelian && G.n <= 64) {
        for (const SubgroupPair& pr : complementary_pairs(G))
            out.push_back(projection_endo(G, pr.image_mask, pr.kernel_mask));
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end())
            throw InternalCheckError("duplicate idempotents from subgroup pairs");
        return out;
    }
    for (const Endomorphism& f : enumerate_endomorphisms(G))
        if (is_idempotent(G, f)) out.push_back(f);
    return out;
}

namespace {

struct DecContext {
    std::vector<std::uint64_t> masks;
    std::map<std::uint64_t, std::vector<SubgroupPair>> dec;  // lazily filled

    const std::vector<SubgroupPair>& dec_of(std::uint64_t whole) {
        auto it = dec.find(whole);
        if (it == dec.end()) it = dec.emplace(whole, pairs_within(masks, whole)).first;
        return it->second;
    }
};

}  // namespace

std::uint64_t count_associative_pairs(const FiniteGroup& G) {
    if (G.abelian && G.n <= 64) {
        // Counts only: caching pair-list sizes (not the lists) keeps the
        // largest subgroup lattices cheap.
        const auto masks = enumerate_subgroup_masks(G);
        const std::uint64_t whole = G.n == 64 ? ~0ull : (1ull << G.n) - 1;
        std::map<std::uint64_t, std::uint64_t> sizes;
        auto dec_count = [&](std::uint64_t m) -> std::uint64_t {
            auto it = sizes.find(m);
            if (it == sizes.end()) it = sizes.emplace(m, pairs_within(masks, m).size()).first;
            return it->second;
        };
        std::uint64_t total = 0;
        for (const SubgroupPair& e : pairs_within(masks, whole))
            total += dec_count(e.image_mask) * dec_count(e.kernel_mask);
        return total;
    }
    const auto idem = enumerate_idempotents(G);
    std::uint64_t total = 0;
    for (const Endomorphism& e : idem)
        for (const Endomorphism& f : idem)
            if (commutes(G, e, f) && is_image_commuting(G, e, f)) ++total;
    return total;
}

void for_each_associative_pair(const FiniteGroup& G,
                               const std::function<void(const EndoPair&)>& fn) {
    const std::uint64_t total = count_associative_pairs(G);
    if (total > kPairStreamLimit)
        throw CapError("associative pair stream of " + G.name + " has " +
                       std::to_string(total) + " pairs, above limit " +
                       std::to_string(kPairStreamLimit));

    if (G.abelian && G.n <= 64) {
        DecContext ctx{enumerate_subgroup_masks(G), {}};
        const std::uint64_t whole = G.n == 64 ? ~0ull : (1ull << G.n) - 1;

        // Partner of e = (P, Q) from (A, B) in dec(P) and (C, D) in dec(Q):
        // the projection with image A + C and kernel B + D, assembled as a
        // direct sum of the two restricted projections.
        for (const SubgroupPair& e : ctx.dec_of(whole)) {
            const Endomorphism e_endo = projection_endo(G, e.image_mask, e.kernel_mask);
            const auto pelems = mask_elements(e.image_mask);
            const auto qelems = mask_elements(e.kernel_mask);
            std::vector<elem_t> on_p(G.n, 0), on_q(G.n, 0);
            for (const SubgroupPair& pa : ctx.dec_of(e.image_mask)) {
                for (int a : mask_elements(pa.image_mask))
                    for (int b : mask_elements(pa.kernel_mask))
                        on_p[G.add(a, b)] = static_cast<elem_t>(a);
                for (const SubgroupPair& qa : ctx.dec_of(e.kernel_mask)) {
                    for (int c : mask_elements(qa.image_mask))
                        for (int d : mask_elements(qa.kernel_mask))
                            on_q[G.add(c, d)] = static_cast<elem_t>(c);
                    EndoPair pr;
                    pr.left = e_endo;
                    pr.right.map.resize(G.n);
                    for (int p : pelems)
                        for (int q : qelems)
                            pr.right.map[G.add(p, q)] =
                                static_cast<elem_t>(G.add(on_p[p], on_q[q]));
                    fn(pr);
                }
            }
        }
        return;
    }

    const auto idem = enumerate_idempotents(G);
    for (const Endomorphism& e : idem)
        for (const Endomorphism& f : idem)
            if (commutes(G, e, f) && is_image_commuting(G, e, f)) fn(EndoPair{e, f});
}

}  // namespace icr
