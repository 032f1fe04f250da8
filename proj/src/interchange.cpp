#include "icr/interchange.hpp"

#include <algorithm>

namespace icr {

EndoPair extract_pair(const InterchangeRing& R) {
    const int n = R.group.n;
    EndoPair p;
    p.left.map.resize(n);
    p.right.map.resize(n);
    for (int x = 0; x < n; ++x) {
        p.left.map[x] = static_cast<elem_t>(R.mul(x, 0));
        p.right.map[x] = static_cast<elem_t>(R.mul(0, x));
    }
    return p;
}

namespace {

bool law_holds_at(const FiniteGroup& G, const std::vector<elem_t>& prod, int w, int x, int y,
                  int z) {
    auto mul = [&](int a, int b) { return prod[static_cast<std::size_t>(a) * G.n + b]; };
    return mul(G.add(w, x), G.add(y, z)) == G.add(mul(w, y), mul(x, z));
}

}  // namespace

InterchangeRing build_from_pair(const FiniteGroup& G, const EndoPair& pair, bool verify_law) {
    if (static_cast<int>(pair.left.map.size()) != G.n ||
        static_cast<int>(pair.right.map.size()) != G.n)
        throw ValidationError("pair maps must match the group order");
    if (!is_endomorphism(G, pair.left.map))
        throw ValidationError("left map is not an endomorphism");
    if (!is_endomorphism(G, pair.right.map))
        throw ValidationError("right map is not an endomorphism");
    std::pair<int, int> wit;
    if (!is_image_commuting(G, pair.left, pair.right, &wit))
        throw ValidationError("pair is not image-commuting: left(" + std::to_string(wit.first) +
                              ") and right(" + std::to_string(wit.second) + ") do not commute");

    InterchangeRing R;
    R.group = G;
    R.prod.resize(static_cast<std::size_t>(G.n) * G.n);
    for (int x = 0; x < G.n; ++x) {
        const int lx = pair.left.map[x];
        for (int y = 0; y < G.n; ++y)
            R.prod[static_cast<std::size_t>(x) * G.n + y] =
                static_cast<elem_t>(G.add(lx, pair.right.map[y]));
    }

    if (verify_law) {
        if (G.n <= 32) {
            for (int w = 0; w < G.n; ++w)
                for (int x = 0; x < G.n; ++x)
                    for (int y = 0; y < G.n; ++y)
                        for (int z = 0; z < G.n; ++z)
                            if (!law_holds_at(G, R.prod, w, x, y, z))
                                throw InternalCheckError("interchange law failed on built table");
        } else {
            for (std::uint64_t i = 0; i < 4096; ++i) {
                const std::uint64_t h = mix64(i + 1);
                const int w = static_cast<int>(h % G.n);
                const int x = static_cast<int>((h >> 16) % G.n);
                const int y = static_cast<int>((h >> 32) % G.n);
                const int z = static_cast<int>((h >> 48) % G.n);
                if (!law_holds_at(G, R.prod, w, x, y, z))
                    throw InternalCheckError("interchange law failed on built table");
            }
        }
    }
    return R;
}

LawCheckResult check_interchange_law(const FiniteGroup& G, const std::vector<elem_t>& prod) {
    LawCheckResult res;
    if (prod.size() != static_cast<std::size_t>(G.n) * G.n)
        throw ValidationError("product table size does not match the group order");
    for (elem_t v : prod)
        if (v >= G.n) throw ValidationError("product table entry out of range");

    auto mul = [&](int a, int b) { return prod[static_cast<std::size_t>(a) * G.n + b]; };
    std::vector<elem_t> left(G.n), right(G.n);
    for (int x = 0; x < G.n; ++x) {
        left[x] = static_cast<elem_t>(mul(x, 0));
        right[x] = static_cast<elem_t>(mul(0, x));
    }

    // Each failing sub-check yields a quadruple whose two sides are literal
    // table reads, so the counterexample is valid no matter what else holds.
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            if (left[G.add(a, b)] != G.add(left[a], left[b])) {
                res.witness = {a, b, 0, 0};
                res.reason = "left-map homomorphism";
                return res;
            }
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            if (right[G.add(a, b)] != G.add(right[a], right[b])) {
                res.witness = {0, 0, a, b};
                res.reason = "right-map homomorphism";
                return res;
            }
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y)
            if (mul(x, y) != G.add(left[x], right[y])) {
                res.witness = {x, 0, 0, y};
                res.reason = "reconstruction";
                return res;
            }
    // With reconstruction verified, x*y = left(x) + right(y), so a commutation
    // failure breaks the law at (0, x, y, 0).
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y)
            if (G.add(left[x], right[y]) != G.add(right[y], left[x])) {
                res.witness = {0, x, y, 0};
                res.reason = "image-commuting";
                return res;
            }

    res.ok = true;
    return res;
}

bool brute_force_interchange_law(const FiniteGroup& G, const std::vector<elem_t>& prod,
                                 std::array<int, 4>* witness) {
    for (int w = 0; w < G.n; ++w)
        for (int x = 0; x < G.n; ++x)
            for (int y = 0; y < G.n; ++y)
                for (int z = 0; z < G.n; ++z)
                    if (!law_holds_at(G, prod, w, x, y, z)) {
                        if (witness) *witness = {w, x, y, z};
                        return false;
                    }
    return true;
}

InterchangeRing ring_from_table(const FiniteGroup& G, std::vector<elem_t> prod) {
    const LawCheckResult chk = check_interchange_law(G, prod);
    if (!chk.ok)
        throw ValidationError(
            "product table violates the interchange law (" + chk.reason + "): witness (" +
            std::to_string(chk.witness[0]) + "," + std::to_string(chk.witness[1]) + "," +
            std::to_string(chk.witness[2]) + "," + std::to_string(chk.witness[3]) + ")");
    InterchangeRing R;
    R.group = G;
    R.prod = std::move(prod);
    return R;
}

const char* essential_kind_name(EssentialKind k) {
    switch (k) {
        case EssentialKind::none: return "none";
        case EssentialKind::zero: return "zero";
        case EssentialKind::left_factor: return "left_factor";
        case EssentialKind::right_factor: return "right_factor";
        case EssentialKind::addition: return "addition";
    }
    return "none";
}

EssentialKind essential_kind(const FiniteGroup& G, const EndoPair& pair) {
    const Endomorphism zero = zero_endo(G), id = identity_endo(G);
    const bool lz = pair.left == zero, rz = pair.right == zero;
    const bool li = pair.left == id, ri = pair.right == id;
    if (lz && rz) return EssentialKind::zero;
    if (li && rz) return EssentialKind::left_factor;
    if (lz && ri) return EssentialKind::right_factor;
    if (li && ri) return EssentialKind::addition;
    return EssentialKind::none;
}

RingProperties pair_properties(const FiniteGroup& G, const EndoPair& pair) {
    RingProperties p;
    p.commutative = pair.left == pair.right;
    p.associative = is_idempotent(G, pair.left) && is_idempotent(G, pair.right) &&
                    commutes(G, pair.left, pair.right);
    p.idempotent_product = true;
    for (int x = 0; x < G.n; ++x)
        if (G.add(pair.left.map[x], pair.right.map[x]) != x) {
            p.idempotent_product = false;
            break;
        }
    p.band = p.associative && p.idempotent_product;
    const Endomorphism zero = zero_endo(G), id = identity_endo(G);
    p.zero_semigroup = pair.left == zero && pair.right == zero;
    p.proper = !(pair.left == id && pair.right == id);
    p.essential = essential_kind(G, pair);
    return p;
}

RingProperties magma_properties_oracle(const InterchangeRing& R) {
    const FiniteGroup& G = R.group;
    const int n = G.n;
    RingProperties p;

    p.commutative = true;
    for (int x = 0; x < n && p.commutative; ++x)
        for (int y = x + 1; y < n; ++y)
            if (R.mul(x, y) != R.mul(y, x)) {
                p.commutative = false;
                break;
            }

    p.associative = true;
    for (int x = 0; x < n && p.associative; ++x)
        for (int y = 0; y < n && p.associative; ++y) {
            const int xy = R.mul(x, y);
            for (int z = 0; z < n; ++z)
                if (R.mul(xy, z) != R.mul(x, R.mul(y, z))) {
                    p.associative = false;
                    break;
                }
        }

    p.idempotent_product = true;
    for (int x = 0; x < n; ++x)
        if (R.mul(x, x) != x) {
            p.idempotent_product = false;
            break;
        }

    p.band = p.associative && p.idempotent_product;

    p.zero_semigroup = std::all_of(R.prod.begin(), R.prod.end(), [](elem_t v) { return v == 0; });
    p.proper = R.prod != G.add_table;

    bool left_f = true, right_f = true, addition = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int v = R.mul(x, y);
            if (v != x) left_f = false;
            if (v != y) right_f = false;
            if (v != G.add(x, y)) addition = false;
        }
    p.essential = p.zero_semigroup  ? EssentialKind::zero
                  : left_f          ? EssentialKind::left_factor
                  : right_f         ? EssentialKind::right_factor
                  : addition        ? EssentialKind::addition
                                    : EssentialKind::none;
    return p;
}

std::optional<int> find_absorbing_element(const InterchangeRing& R) {
    const int n = R.group.n;
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (R.mul(a, x) != a || R.mul(x, a) != a) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    return std::nullopt;
}

bool check_basic_identities(const InterchangeRing& R, std::string* failure) {
    const FiniteGroup& G = R.group;
    auto fail = [&](const std::string& msg) {
        if (failure) *failure = msg;
        return false;
    };
    if (R.mul(0, 0) != 0) return fail("0*0 != 0");
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y) {
            if (R.mul(0, G.add(x, y)) != G.add(R.mul(0, x), R.mul(0, y)))
                return fail("0*(x+y) != 0*x + 0*y at x=" + std::to_string(x) +
                            " y=" + std::to_string(y));
            if (R.mul(x, y) != G.add(R.mul(x, 0), R.mul(0, y)))
                return fail("x*y != x*0 + 0*y at x=" + std::to_string(x) +
                            " y=" + std::to_string(y));
            if (R.mul(G.neg(x), G.neg(y)) != G.neg(R.mul(x, y)))
                return fail("(-x)*(-y) != -(x*y) at x=" + std::to_string(x) +
                            " y=" + std::to_string(y));
        }
    return true;
}

}  // namespace icr
