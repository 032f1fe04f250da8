#include "icr/structures.hpp"

#include <algorithm>
#include <bit>

namespace icr {

namespace {

void require_maskable(const FiniteGroup& G) {
    if (G.n > 64) throw CapError("element masks require group order <= 64");
}

}  // namespace

bool is_subgroup_mask(const FiniteGroup& G, std::uint64_t mask) {
    require_maskable(G);
    if (!(mask & 1)) return false;  // needs 0
    const auto elems = mask_elements(mask);
    for (int a : elems)
        for (int b : elems)
            if (!(mask & (1ull << G.add(a, b)))) return false;
    return true;  // finite and closed implies inverses
}

bool is_normal_subgroup(const FiniteGroup& G, std::uint64_t mask) {
    if (!is_subgroup_mask(G, mask)) return false;
    if (G.abelian) return true;
    for (int g = 0; g < G.n; ++g)
        for (int i : mask_elements(mask))
            if (!(mask & (1ull << G.add(G.add(g, i), G.neg(g))))) return false;
    return true;
}

bool is_ideal(const InterchangeRing& R, std::uint64_t mask) {
    if (!is_normal_subgroup(R.group, mask)) return false;
    const EndoPair pair = extract_pair(R);
    for (int i : mask_elements(mask)) {
        if (!(mask & (1ull << pair.left.map[i]))) return false;
        if (!(mask & (1ull << pair.right.map[i]))) return false;
    }
    return true;
}

std::vector<std::uint64_t> enumerate_ideal_masks(const InterchangeRing& R) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : enumerate_subgroup_masks(R.group))
        if (is_ideal(R, m)) out.push_back(m);
    // Subgroup masks already arrive ascending by (size, mask).
    return out;
}

InterchangeRing quotient_ring(const InterchangeRing& R, std::uint64_t ideal_mask,
                              std::vector<int>* class_of) {
    const FiniteGroup& G = R.group;
    require_maskable(G);
    if (!is_ideal(R, ideal_mask)) throw ValidationError("mask is not an ideal of the ring");

    // Cosets: 0's coset first, the rest by least member.
    const auto ideal = mask_elements(ideal_mask);
    std::vector<int> cls(G.n, -1);
    std::vector<int> least;  // least member per class id
    for (int x = 0; x < G.n; ++x) {
        if (cls[x] >= 0) continue;
        const int id = static_cast<int>(least.size());
        least.push_back(x);
        for (int i : ideal) {
            const int y = G.add(x, i);
            if (cls[y] >= 0 && cls[y] != id)
                throw InternalCheckError("cosets are not disjoint");
            cls[y] = id;
        }
    }
    const int k = static_cast<int>(least.size());
    if (k * static_cast<int>(ideal.size()) != G.n)
        throw InternalCheckError("coset count times ideal size misses the group order");

    // Quotient operations from representatives, then literal well-definedness
    // sweeps over every element pair.
    std::vector<int> addq(static_cast<std::size_t>(k) * k), prodq(addq.size());
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            addq[static_cast<std::size_t>(a) * k + b] = cls[G.add(least[a], least[b])];
            prodq[static_cast<std::size_t>(a) * k + b] = cls[R.mul(least[a], least[b])];
        }
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y) {
            if (addq[static_cast<std::size_t>(cls[x]) * k + cls[y]] != cls[G.add(x, y)])
                throw InternalCheckError("quotient sum is not well defined");
            if (prodq[static_cast<std::size_t>(cls[x]) * k + cls[y]] != cls[R.mul(x, y)])
                throw InternalCheckError("quotient product is not well defined");
        }

    InterchangeRing Q;
    Q.group = make_group_from_table(k, addq, G.name + "/I" + std::to_string(ideal.size()));
    Q.prod.assign(prodq.begin(), prodq.end());
    const LawCheckResult chk = check_interchange_law(Q.group, Q.prod);
    if (!chk.ok)
        throw InternalCheckError("quotient product violates the interchange law: " + chk.reason);
    if (class_of) *class_of = cls;
    return Q;
}

bool is_simple(const InterchangeRing& R) {
    if (R.group.n <= 1) return false;
    return enumerate_ideal_masks(R).size() == 2;  // only 0 and R
}

bool is_maximal_ideal_direct(const InterchangeRing& R, std::uint64_t mask) {
    const std::uint64_t whole = R.group.n == 64 ? ~0ull : (1ull << R.group.n) - 1;
    if (!is_ideal(R, mask) || mask == whole) return false;
    for (std::uint64_t m : enumerate_ideal_masks(R))
        if (m != mask && m != whole && (m & mask) == mask) return false;
    return true;
}

bool is_maximal_ideal_via_quotient(const InterchangeRing& R, std::uint64_t mask) {
    const std::uint64_t whole = R.group.n == 64 ? ~0ull : (1ull << R.group.n) - 1;
    if (!is_ideal(R, mask) || mask == whole) return false;
    return is_simple(quotient_ring(R, mask));
}

InterchangeRing matrix_ring(const InterchangeRing& R, int m) {
    if (m < 1) throw ValidationError("matrix dimension must be positive");
    const FiniteGroup& G = R.group;
    const int cells = m * m;
    long long size = 1;
    for (int i = 0; i < cells; ++i) {
        size *= G.n;
        if (size > size_cap())
            throw CapError("matrix ring order " + std::to_string(size) + "+ exceeds cap " +
                           std::to_string(size_cap()));
    }
    const int N = static_cast<int>(size);

    // Digit decomposition: cell (i, j) of matrix `a` sits at digit i*m + j.
    std::vector<std::vector<int>> digits(N, std::vector<int>(cells));
    for (int a = 0; a < N; ++a) {
        int rest = a;
        for (int d = 0; d < cells; ++d) {
            digits[a][d] = rest % G.n;
            rest /= G.n;
        }
    }

    std::vector<int> addN(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            int enc = 0;
            for (int d = cells - 1; d >= 0; --d)
                enc = enc * G.n + G.add(digits[a][d], digits[b][d]);
            addN[static_cast<std::size_t>(a) * N + b] = enc;
        }

    InterchangeRing M;
    M.group = make_group_from_table(
        N, addN, "mat" + std::to_string(m) + "(" + G.name + ")");
    M.prod.resize(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            int enc = 0;
            for (int d = cells - 1; d >= 0; --d) {
                const int i = d / m, j = d % m;
                int acc = 0;
                for (int kk = 0; kk < m; ++kk)
                    acc = G.add(acc, R.mul(digits[a][i * m + kk], digits[b][kk * m + j]));
                enc = enc * G.n + acc;
            }
            M.prod[static_cast<std::size_t>(a) * N + b] = static_cast<elem_t>(enc);
        }

    const LawCheckResult chk = check_interchange_law(M.group, M.prod);
    if (!chk.ok)
        throw InternalCheckError("matrix product violates the interchange law: " + chk.reason);
    return M;
}

bool check_kfold_identity(const InterchangeRing& R, int arity) {
    if (arity < 1) throw ValidationError("arity must be positive");
    const FiniteGroup& G = R.group;
    const int vars = 2 * arity;

    double space = 1;
    for (int i = 0; i < vars; ++i) space *= G.n;

    auto eval = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
        int sx = 0, sy = 0, sp = 0;
        for (int i = 0; i < arity; ++i) {
            sx = G.add(sx, xs[i]);
            sy = G.add(sy, ys[i]);
            sp = G.add(sp, R.mul(xs[i], ys[i]));
        }
        return R.mul(sx, sy) == sp;
    };

    std::vector<int> xs(arity, 0), ys(arity, 0);
    if (space <= 2'000'000) {
        std::vector<int> tup(vars, 0);
        while (true) {
            for (int i = 0; i < arity; ++i) {
                xs[i] = tup[i];
                ys[i] = tup[arity + i];
            }
            if (!eval(xs, ys)) return false;
            int i = vars - 1;
            while (i >= 0 && tup[i] == G.n - 1) { tup[i] = 0; --i; }
            if (i < 0) break;
            ++tup[i];
        }
        return true;
    }
    for (std::uint64_t trial = 0; trial < 4096; ++trial) {
        std::uint64_t h = mix64(trial + 0x9E3779B97F4A7C15ull);
        for (int i = 0; i < arity; ++i) {
            xs[i] = static_cast<int>(h % G.n);
            h = mix64(h);
            ys[i] = static_cast<int>(h % G.n);
            h = mix64(h);
        }
        if (!eval(xs, ys)) return false;
    }
    return true;
}

bool matrix_law_entrywise(const InterchangeRing& R, int m) {
    if (m < 1) throw ValidationError("matrix size must be positive");
    const FiniteGroup& G = R.group;
    const int vars = 4 * m;

    double space = 1;
    for (int i = 0; i < vars; ++i) space *= G.n;
    if (space > static_cast<double>(1 << 24))
        throw CapError("entrywise law check over " + G.name + " at size " + std::to_string(m) +
                       " sweeps " + std::to_string(space) + " assignments, above 2^24");

    // tup = (w_1..w_m, x_1..x_m, y_1..y_m, z_1..z_m): one row of W and X, one
    // column of Y and Z.
    std::vector<int> tup(vars, 0);
    while (true) {
        const int* w = tup.data();
        const int* x = w + m;
        const int* y = x + m;
        const int* z = y + m;
        int lhs = 0, wy = 0, xz = 0;
        for (int k = 0; k < m; ++k) {
            lhs = G.add(lhs, R.mul(G.add(w[k], x[k]), G.add(y[k], z[k])));
            wy = G.add(wy, R.mul(w[k], y[k]));
            xz = G.add(xz, R.mul(x[k], z[k]));
        }
        if (lhs != G.add(wy, xz)) return false;
        int i = vars - 1;
        while (i >= 0 && tup[i] == G.n - 1) { tup[i] = 0; --i; }
        if (i < 0) break;
        ++tup[i];
    }
    return true;
}

}  // namespace icr
