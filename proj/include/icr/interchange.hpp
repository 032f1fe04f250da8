#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "icr/endo.hpp"
#include "icr/group.hpp"

namespace icr {

// A group together with a second binary operation (the product) that
// satisfies the interchange law against the group operation:
//   (w + x) * (y + z) = (w * y) + (x * z)  for all w, x, y, z.
struct InterchangeRing {
    FiniteGroup group;
    std::vector<elem_t> prod;  // row-major: prod[x * n + y] = x * y

    int mul(int x, int y) const { return prod[static_cast<std::size_t>(x) * group.n + y]; }
};

// The product of each valid ring decomposes as x * y = left(x) + right(y)
// where left(x) = x * 0 and right(y) = 0 * y.
EndoPair extract_pair(const InterchangeRing& R);

// Builds the ring with product x * y = left(x) + right(y). Throws
// ValidationError unless both maps are endomorphisms and the pair is
// image-commuting. When verify_law is set, additionally evaluates the
// interchange law literally on the finished table: every quadruple for
// n <= 32, otherwise 4096 reproducibly seeded quadruples.
InterchangeRing build_from_pair(const FiniteGroup& G, const EndoPair& pair,
                                bool verify_law = true);

// Complete O(n^2) decision procedure for the interchange law on an arbitrary
// product table. Failure always carries a literal counterexample quadruple
// (w, x, y, z) with (w+x)*(y+z) != (w*y)+(x*z), plus which sub-check broke:
//   "left-map homomorphism"   witness (a, b, 0, 0)
//   "right-map homomorphism"  witness (0, 0, a, b)
//   "reconstruction"          witness (x, 0, 0, y)
//   "image-commuting"         witness (0, x, y, 0)
struct LawCheckResult {
    bool ok = false;
    std::array<int, 4> witness{0, 0, 0, 0};
    std::string reason;
};
LawCheckResult check_interchange_law(const FiniteGroup& G, const std::vector<elem_t>& prod);

// Independent O(n^4) oracle: evaluates every quadruple literally.
bool brute_force_interchange_law(const FiniteGroup& G, const std::vector<elem_t>& prod,
                                 std::array<int, 4>* witness = nullptr);

// Validates an arbitrary table via check_interchange_law and wraps it.
InterchangeRing ring_from_table(const FiniteGroup& G, std::vector<elem_t> prod);

// The four degenerate products every group carries: x*y = 0, x*y = x,
// x*y = y, and x*y = x + y.
enum class EssentialKind { none, zero, left_factor, right_factor, addition };

const char* essential_kind_name(EssentialKind k);

// Kind of the degenerate product a pair defines, or none. Ties (possible only
// in the one-element group) resolve zero > left_factor > right_factor >
// addition.
EssentialKind essential_kind(const FiniteGroup& G, const EndoPair& pair);

struct RingProperties {
    bool commutative = false;        // x*y = y*x
    bool associative = false;        // (x*y)*z = x*(y*z)
    bool idempotent_product = false; // x*x = x
    bool band = false;               // associative and idempotent_product
    bool proper = false;             // product differs from the group operation
    bool zero_semigroup = false;     // all products are 0
    EssentialKind essential = EssentialKind::none;
};

// Structural route: reads every property off the defining pair.
//   commutative        <=> left = right
//   associative        <=> left, right idempotent and commuting
//   idempotent_product <=> left(x) + right(x) = x pointwise
//   zero_semigroup     <=> both maps are the zero map
//   proper             <=> not both maps are the identity
RingProperties pair_properties(const FiniteGroup& G, const EndoPair& pair);

// Oracle route: reads every property off the product table by exhaustive
// sweeps (associativity is the n^3 one).
RingProperties magma_properties_oracle(const InterchangeRing& R);

// Element a with a*x = x*a = a for every x, if one exists. A valid ring has
// one exactly when it is a zero semigroup (and then it is 0).
std::optional<int> find_absorbing_element(const InterchangeRing& R);

// Four identities that hold in every interchange ring:
//   (1) 0*0 = 0
//   (2) 0*(x+y) = 0*x + 0*y
//   (3) x*y = x*0 + 0*y
//   (4) (-x)*(-y) = -(x*y)
// Returns true when all hold; otherwise fills *failure with a description.
bool check_basic_identities(const InterchangeRing& R, std::string* failure = nullptr);

}  // namespace icr
