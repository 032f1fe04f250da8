#include "icr/canonical.hpp"

#include <algorithm>
#include <bit>

namespace icr {

namespace {

// k with q^k == size (q == 1 forces size == 1).
int log_exact(int q, int size) {
    if (q == 1) {
        if (size != 1) throw InternalCheckError("subgroup size is not a power of the exponent");
        return 0;
    }
    int k = 0;
    while (size > 1) {
        if (size % q != 0)
            throw InternalCheckError("subgroup size is not a power of the exponent");
        size /= q;
        ++k;
    }
    return k;
}

int image_size(const FiniteGroup& G, const std::vector<elem_t>& map) {
    if (G.n <= 64) {
        std::uint64_t m = 0;
        for (elem_t v : map) m |= 1ull << v;
        return std::popcount(m);
    }
    std::vector<char> seen(G.n, 0);
    int count = 0;
    for (elem_t v : map)
        if (!seen[v]) {
            seen[v] = 1;
            ++count;
        }
    return count;
}

// Projection onto the coordinates selected by `keep`, relative to `basis`.
Endomorphism coordinate_projection(const FiniteGroup& G, const PpcBasis& basis,
                                   const std::vector<std::vector<int>>& coords,
                                   const std::vector<char>& keep) {
    const int r = basis.rank();
    Endomorphism f;
    f.map.resize(G.n);
    std::vector<std::vector<int>> mult(r);
    for (int i = 0; i < r; ++i) {
        if (!keep[i]) continue;
        mult[i].assign(basis.orders[i], 0);
        for (int c = 1; c < basis.orders[i]; ++c)
            mult[i][c] = G.add(mult[i][c - 1], basis.basis[i]);
    }
    for (int x = 0; x < G.n; ++x) {
        int v = 0;
        for (int i = 0; i < r; ++i)
            if (keep[i]) v = G.add(v, mult[i][coords[x][i]]);
        f.map[x] = static_cast<elem_t>(v);
    }
    return f;
}

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

}  // namespace

HomocyclicShape homocyclic_shape(const FiniteGroup& G) {
    HomocyclicShape s;
    if (!is_homocyclic(G, &s.prime, &s.exp, &s.rank))
        throw ValidationError(G.name + " is not a direct sum of equal-order cyclic groups");
    s.q = static_cast<int>(upow(static_cast<std::uint64_t>(s.prime ? s.prime : 1), s.exp));
    if (s.rank == 0) s.q = 1;
    return s;
}

std::array<int, 4> dim_vector(const CanonicalTriple& t, int rank) {
    return {t.t1, t.s - t.t1, t.t2 - t.s, rank - t.t2};
}

std::uint64_t canonical_triple_count(int rank) {
    const std::uint64_t r = rank;
    return (r + 1) * (r + 2) * (r + 3) / 6;
}

std::vector<CanonicalTriple> all_canonical_triples(int rank) {
    std::vector<CanonicalTriple> out;
    for (int s = 0; s <= rank; ++s)
        for (int t1 = 0; t1 <= s; ++t1)
            for (int t2 = s; t2 <= rank; ++t2) out.push_back({s, t1, t2});
    if (out.size() != canonical_triple_count(rank))
        throw InternalCheckError("triple enumeration disagrees with the closed form");
    return out;
}

EndoPair canonical_pair(const FiniteGroup& G, const CanonicalTriple& t) {
    const HomocyclicShape shape = homocyclic_shape(G);
    if (!(0 <= t.t1 && t.t1 <= t.s && t.s <= t.t2 && t.t2 <= shape.rank))
        throw ValidationError("triple violates 0 <= t1 <= s <= t2 <= rank");
    const PpcBasis basis = ppc_decompose(G);
    const auto coords = coordinate_table(G, basis);
    std::vector<char> keep1(shape.rank, 0), keep2(shape.rank, 0);
    for (int i = 0; i < t.s; ++i) keep1[i] = 1;
    for (int i = 0; i < t.t1; ++i) keep2[i] = 1;
    for (int i = t.s; i < t.t2; ++i) keep2[i] = 1;
    return EndoPair{coordinate_projection(G, basis, coords, keep1),
                    coordinate_projection(G, basis, coords, keep2)};
}

CanonicalTriple invariant_triple(const FiniteGroup& G, const HomocyclicShape& shape,
                                 const EndoPair& pair) {
    if (shape.rank == 0) return {0, 0, 0};
    int sz1, sz12, sz2;
    if (G.n <= 64) {
        std::uint64_t m1 = 0, m12 = 0, m2 = 0;
        for (int x = 0; x < G.n; ++x) {
            const int lx = pair.left.map[x];
            m1 |= 1ull << lx;
            m12 |= 1ull << pair.right.map[lx];
            m2 |= 1ull << pair.right.map[x];
        }
        sz1 = std::popcount(m1);
        sz12 = std::popcount(m12);
        sz2 = std::popcount(m2);
    } else {
        sz1 = image_size(G, pair.left.map);
        std::vector<elem_t> comp(G.n);
        for (int x = 0; x < G.n; ++x) comp[x] = pair.right.map[pair.left.map[x]];
        sz12 = image_size(G, comp);
        sz2 = image_size(G, pair.right.map);
    }
    const int s = log_exact(shape.q, sz1);
    const int t1 = log_exact(shape.q, sz12);
    const int rank2 = log_exact(shape.q, sz2);
    const CanonicalTriple t{s, t1, s + rank2 - t1};
    if (!(0 <= t.t1 && t.t1 <= t.s && t.s <= t.t2 && t.t2 <= shape.rank))
        throw InternalCheckError("invariants violate 0 <= t1 <= s <= t2 <= rank");
    return t;
}

CanonicalTriple invariant_triple(const FiniteGroup& G, const EndoPair& pair) {
    return invariant_triple(G, homocyclic_shape(G), pair);
}

DiagonalizeContext make_diagonalize_context(const FiniteGroup& G) {
    DiagonalizeContext ctx;
    ctx.group = &G;
    ctx.basis = ppc_decompose(G);  // rejects nonabelian groups
    ctx.coords = coordinate_table(G, ctx.basis);
    const int r = ctx.basis.rank();
    ctx.mult.resize(r);
    for (int i = 0; i < r; ++i) {
        ctx.mult[i].assign(ctx.basis.orders[i], 0);
        for (int c = 1; c < ctx.basis.orders[i]; ++c)
            ctx.mult[i][c] = G.add(ctx.mult[i][c - 1], ctx.basis.basis[i]);
    }
    ctx.homocyclic = is_homocyclic(G, &ctx.shape.prime, &ctx.shape.exp, &ctx.shape.rank);
    if (ctx.homocyclic) {
        ctx.shape.q = static_cast<int>(
            upow(static_cast<std::uint64_t>(ctx.shape.prime ? ctx.shape.prime : 1),
                 ctx.shape.exp));
        if (ctx.shape.rank == 0) ctx.shape.q = 1;
    }
    return ctx;
}

Diagonalization diagonalize_pair(const DiagonalizeContext& ctx, const EndoPair& pair) {
    const FiniteGroup& G = *ctx.group;
    const int r = ctx.basis.rank();
    if (!is_idempotent(G, pair.left) || !is_idempotent(G, pair.right) ||
        !commutes(G, pair.left, pair.right))
        throw ValidationError("diagonalization requires commuting idempotents");

    // Block membership: split by the first projection, then by the second.
    std::vector<std::uint8_t> im1(G.n, 0), ker1(G.n, 0);
    for (int x = 0; x < G.n; ++x) {
        im1[pair.left.map[x]] = 1;
        if (pair.left.map[x] == 0) ker1[x] = 1;
    }
    std::vector<std::uint8_t> blocks[4];
    for (auto& b : blocks) b.assign(G.n, 0);
    for (int x = 0; x < G.n; ++x) {
        if (im1[x]) {
            blocks[0][pair.right.map[x]] = 1;
            if (pair.right.map[x] == 0) blocks[1][x] = 1;
        }
        if (ker1[x]) {
            blocks[2][pair.right.map[x]] = 1;
            if (pair.right.map[x] == 0) blocks[3][x] = 1;
        }
    }
    auto popcnt = [&](const std::vector<std::uint8_t>& v) {
        return static_cast<int>(std::count(v.begin(), v.end(), 1));
    };
    if (popcnt(blocks[0]) * popcnt(blocks[1]) != popcnt(im1) ||
        popcnt(blocks[2]) * popcnt(blocks[3]) != popcnt(ker1))
        throw InternalCheckError("block sizes do not multiply to their halves");

    // Cyclic bases of the blocks. Their concatenation decomposes the group,
    // so its summand orders form the same multiset as the standard basis.
    std::vector<int> target, target_order, target_block;
    for (int b = 0; b < 4; ++b) {
        const PpcBasis bb = subgroup_ppc_basis(G, blocks[b]);
        for (int i = 0; i < bb.rank(); ++i) {
            target.push_back(bb.basis[i]);
            target_order.push_back(bb.orders[i]);
            target_block.push_back(b);
        }
    }
    if (static_cast<int>(target.size()) != r)
        throw InternalCheckError("block ranks do not sum to the group rank");

    // Send each standard summand to the first unused block summand of the
    // same order.
    std::vector<int> pi(r, -1);
    std::vector<char> used(r, 0);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j)
            if (!used[j] && target_order[j] == ctx.basis.orders[i]) {
                pi[i] = j;
                used[j] = 1;
                break;
            }
        if (pi[i] < 0)
            throw InternalCheckError("block summand orders do not match the decomposition");
    }

    // alpha maps standard coordinates onto the matched block summands; it is
    // additive because the coordinate table is (coordinate_table validates
    // spanning and uniqueness).
    Endomorphism alpha;
    alpha.map.resize(G.n);
    std::vector<std::vector<int>> tmult(r);
    for (int i = 0; i < r; ++i) {
        tmult[i].assign(ctx.basis.orders[i], 0);
        for (int c = 1; c < ctx.basis.orders[i]; ++c)
            tmult[i][c] = G.add(tmult[i][c - 1], target[pi[i]]);
    }
    for (int x = 0; x < G.n; ++x) {
        int v = 0;
        for (int i = 0; i < r; ++i) v = G.add(v, tmult[i][ctx.coords[x][i]]);
        alpha.map[x] = static_cast<elem_t>(v);
    }
    if (!is_bijective(alpha))
        throw InternalCheckError("block bases do not assemble into a bijection");

    Diagonalization d;
    d.w.map.resize(G.n);
    for (int x = 0; x < G.n; ++x) d.w.map[alpha.map[x]] = static_cast<elem_t>(x);
    d.diag1.resize(r);
    d.diag2.resize(r);
    for (int i = 0; i < r; ++i) {
        d.diag1[i] = target_block[pi[i]] <= 1;
        d.diag2[i] = target_block[pi[i]] == 0 || target_block[pi[i]] == 2;
    }

    // Validate elementwise: conjugating by w must yield exactly the claimed
    // coordinate projections.
    for (int x = 0; x < G.n; ++x) {
        int p1 = 0, p2 = 0;
        for (int i = 0; i < r; ++i) {
            if (d.diag1[i]) p1 = G.add(p1, ctx.mult[i][ctx.coords[x][i]]);
            if (d.diag2[i]) p2 = G.add(p2, ctx.mult[i][ctx.coords[x][i]]);
        }
        if (d.w.map[pair.left.map[alpha.map[x]]] != p1 ||
            d.w.map[pair.right.map[alpha.map[x]]] != p2)
            throw InternalCheckError("conjugated pair is not the claimed projection pair");
    }

    if (ctx.homocyclic) {
        // Equal summand orders make the matching the identity, so the
        // coefficients land in canonical block order and agree with the
        // image-size invariants.
        const CanonicalTriple t = triple_from_diagonal(d);
        for (int i = 0; i < r; ++i)
            if (d.diag1[i] != (i < t.s) || d.diag2[i] != (i < t.t1 || (t.s <= i && i < t.t2)))
                throw InternalCheckError("diagonal coefficients are not in canonical order");
        if (t != invariant_triple(G, ctx.shape, pair))
            throw InternalCheckError("diagonal triple disagrees with the invariant triple");
    }
    return d;
}

Diagonalization diagonalize_pair(const FiniteGroup& G, const EndoPair& pair) {
    if (!is_endomorphism(G, pair.left.map) || !is_endomorphism(G, pair.right.map))
        throw ValidationError("diagonalization requires a pair of endomorphisms");
    return diagonalize_pair(make_diagonalize_context(G), pair);
}

std::array<int, 4> diagonal_dims(const Diagonalization& d) {
    if (d.diag1.size() != d.diag2.size())
        throw ValidationError("diagonal coefficient vectors differ in length");
    std::array<int, 4> dims{};
    for (std::size_t i = 0; i < d.diag1.size(); ++i) {
        if ((d.diag1[i] & ~1) != 0 || (d.diag2[i] & ~1) != 0)
            throw ValidationError("diagonal coefficients must be 0 or 1");
        ++dims[d.diag1[i] ? (d.diag2[i] ? 0 : 1) : (d.diag2[i] ? 2 : 3)];
    }
    return dims;
}

CanonicalTriple triple_from_diagonal(const Diagonalization& d) {
    const auto dims = diagonal_dims(d);
    return {dims[0] + dims[1], dims[0], dims[0] + dims[1] + dims[2]};
}

CanonicalTriple canonical_form(const FiniteGroup& G, const EndoPair& pair) {
    const HomocyclicShape shape = homocyclic_shape(G);
    if (!is_endomorphism(G, pair.left.map) || !is_endomorphism(G, pair.right.map))
        throw ValidationError("canonical form requires a pair of endomorphisms");
    if (!is_idempotent(G, pair.left) || !is_idempotent(G, pair.right) ||
        !commutes(G, pair.left, pair.right))
        throw ValidationError("canonical form requires commuting idempotents");
    return invariant_triple(G, shape, pair);
}

std::uint64_t gl_order(int p, int k) {
    const std::uint64_t pk = upow(static_cast<std::uint64_t>(p), k);
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i) v *= pk - upow(static_cast<std::uint64_t>(p), i);
    return v;
}

std::uint64_t bucket_size_formula(const HomocyclicShape& shape, const CanonicalTriple& t) {
    if (shape.rank == 0) return 1;
    const auto d = dim_vector(t, shape.rank);
    int sq = 0;
    for (int di : d) sq += di * di;
    const std::uint64_t num = gl_order(shape.prime, shape.rank);
    std::uint64_t den = 1;
    for (int di : d) den *= gl_order(shape.prime, di);
    if (num % den != 0) throw InternalCheckError("stabilizer order does not divide the group");
    return upow(static_cast<std::uint64_t>(shape.prime),
                (shape.exp - 1) * (shape.rank * shape.rank - sq)) *
           (num / den);
}

std::uint64_t total_associative_pairs_formula(const HomocyclicShape& shape) {
    std::uint64_t total = 0;
    for (const CanonicalTriple& t : all_canonical_triples(shape.rank))
        total += bucket_size_formula(shape, t);
    return total;
}

std::uint64_t associative_class_bound(int rank) { return 1ull << (2 * rank); }

std::uint64_t band_class_bound(int rank) { return 1ull << rank; }

std::vector<int> first_primes(int count) {
    std::vector<int> out;
    for (int c = 2; static_cast<int>(out.size()) < count; ++c) {
        bool prime = true;
        for (int d = 2; d * d <= c; ++d)
            if (c % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(c);
    }
    return out;
}

std::uint64_t squarefree_witness_order(int rank) {
    std::uint64_t v = 1;
    for (int p : first_primes(rank)) v *= static_cast<std::uint64_t>(p);
    return v;
}

namespace {

// Gaussian elimination over F_p.
bool invertible_mod_p(std::vector<std::vector<int>> m, int p) {
    const int r = static_cast<int>(m.size());
    for (auto& row : m)
        for (int& v : row) v %= p;
    for (int col = 0; col < r; ++col) {
        int pivot = -1;
        for (int row = col; row < r; ++row)
            if (m[row][col] % p != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return false;
        std::swap(m[col], m[pivot]);
        for (int row = col + 1; row < r; ++row) {
            // Eliminate using row operations; scale-free elimination:
            // row <- pivot_value * row - row_value * pivot_row.
            const int rv = m[row][col] % p, pv = m[col][col] % p;
            for (int k = col; k < r; ++k)
                m[row][k] = ((pv * m[row][k] - rv * m[col][k]) % p + p * p) % p;
        }
    }
    return true;
}

}  // namespace

Endomorphism random_homocyclic_automorphism(const FiniteGroup& G, std::uint64_t seed) {
    const HomocyclicShape shape = homocyclic_shape(G);
    if (shape.rank == 0) return identity_endo(G);
    const int r = shape.rank, q = shape.q;
    const PpcBasis basis = ppc_decompose(G);
    const auto coords = coordinate_table(G, basis);

    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<int>> m(r, std::vector<int>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                m[i][j] = static_cast<int>(
                    mix64(seed ^ (attempt * 1000003ull + static_cast<std::uint64_t>(i) * 131 +
                                  static_cast<std::uint64_t>(j))) %
                    static_cast<std::uint64_t>(q));
        if (!invertible_mod_p(m, shape.prime)) continue;

        std::vector<std::vector<int>> mult(r);
        for (int i = 0; i < r; ++i) {
            mult[i].assign(q, 0);
            for (int c = 1; c < q; ++c) mult[i][c] = G.add(mult[i][c - 1], basis.basis[i]);
        }
        Endomorphism alpha;
        alpha.map.resize(G.n);
        for (int x = 0; x < G.n; ++x) {
            int v = 0;
            for (int i = 0; i < r; ++i) {
                int c = 0;
                for (int j = 0; j < r; ++j) c += m[i][j] * coords[x][j];
                v = G.add(v, mult[i][c % q]);
            }
            alpha.map[x] = static_cast<elem_t>(v);
        }
        if (!is_automorphism(G, alpha))
            throw InternalCheckError("matrix construction produced a non-automorphism");
        return alpha;
    }
    throw InternalCheckError("no invertible matrix found in 1000 seeded attempts");
}

}  // namespace icr
