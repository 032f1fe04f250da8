#pragma once

#include <cstdint>
#include <vector>

#include "icr/endo.hpp"
#include "icr/interchange.hpp"

namespace icr {

// Two pairs are similar when one is the simultaneous conjugate of the other
// by a single automorphism; similar pairs define isomorphic ring products,
// and the isomorphism classes of products on G are exactly the similarity
// orbits of image-commuting pairs.

// All conjugates of one pair, ascending and deduplicated.
std::vector<EndoPair> orbit_of_pair(const FiniteGroup& G,
                                    const std::vector<Endomorphism>& autos, const EndoPair& p);

bool similar_pairs(const FiniteGroup& G, const std::vector<Endomorphism>& autos,
                   const EndoPair& a, const EndoPair& b);

struct Orbit {
    EndoPair rep;                   // the ascending-least member
    std::vector<EndoPair> members;  // ascending, unique
};

// Orbit partition of a conjugation-closed, ascending pair list. Throws
// InternalCheckError if a conjugate escapes the list.
std::vector<Orbit> orbit_decomposition(const FiniteGroup& G,
                                       const std::vector<Endomorphism>& autos,
                                       const std::vector<EndoPair>& pairs);

// Per-orbit tallies; every property is conjugation-invariant, so each orbit
// is counted from its representative.
struct ClassCounts {
    std::uint64_t pairs = 0;    // pairs classified
    std::uint64_t classes = 0;  // orbits
    std::uint64_t associative = 0;
    std::uint64_t commutative = 0;
    std::uint64_t commutative_associative = 0;
    std::uint64_t idempotent_product = 0;
    std::uint64_t band = 0;
    std::uint64_t proper = 0;
    std::uint64_t zero_semigroup = 0;
    std::uint64_t essential = 0;    // one of the four degenerate products
    std::uint64_t inessential = 0;  // classes - essential
};

struct Classification {
    std::vector<Orbit> orbits;
    ClassCounts counts;
};

ClassCounts tally_orbits(const FiniteGroup& G, const std::vector<Orbit>& orbits,
                         std::uint64_t pair_count);

// Classifies every ring product on G, i.e. every image-commuting pair.
// Guards: the pair list must fit in kEndoEnumLimit entries and the sweep
// workload |pairs| * |Aut| in kClassifyPairLimit.
Classification classify_all_pairs(const FiniteGroup& G);

// Classifies only the associative products: image-commuting pairs of
// commuting idempotents.
Classification classify_associative(const FiniteGroup& G);

// Independent class count: averages fixed-pair counts over the automorphism
// group. For abelian G the pairs fixed by alpha are C(alpha)^2 where C(alpha)
// is the centralizer of alpha in the endomorphism monoid.
std::uint64_t burnside_all_pairs_class_count(const FiniteGroup& G);

}  // namespace icr
