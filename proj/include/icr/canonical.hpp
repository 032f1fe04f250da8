#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "icr/endo.hpp"
#include "icr/group.hpp"

namespace icr {

// Canonical forms live on homocyclic groups: direct sums of `rank` copies of
// Z_q with q = prime^exp. The trivial group has rank 0 and q = 1.
struct HomocyclicShape {
    int prime = 0, exp = 0, rank = 0, q = 1;
};

// Throws ValidationError when G is not homocyclic.
HomocyclicShape homocyclic_shape(const FiniteGroup& G);

// Every associative product on a homocyclic group of rank r is similar to
// exactly one canonical pair described by integers 0 <= t1 <= s <= t2 <= r:
// the first projection hits coordinates [0, s), the second hits [0, t1) and
// [s, t2).
struct CanonicalTriple {
    int s = 0, t1 = 0, t2 = 0;

    bool operator==(const CanonicalTriple&) const = default;
    auto operator<=>(const CanonicalTriple&) const = default;
};

// (t1, s - t1, t2 - s, r - t2): coordinate counts of the four blocks on which
// the canonical pair acts as (1,1), (1,0), (0,1), (0,0).
std::array<int, 4> dim_vector(const CanonicalTriple& t, int rank);

// Number of valid triples: (r+1)(r+2)(r+3)/6.
std::uint64_t canonical_triple_count(int rank);

// All valid triples, ascending by (s, t1, t2).
std::vector<CanonicalTriple> all_canonical_triples(int rank);

// The coordinate-projection pair for a triple.
EndoPair canonical_pair(const FiniteGroup& G, const CanonicalTriple& t);

// Conjugation-invariant route to the triple of an associative pair (f, g):
//   s  = log_q |im f|
//   t1 = log_q |im (g o f)|
//   t2 = s + log_q |im g| - t1
// Requires the pair to be associative (commuting idempotents) but does not
// re-validate; diagonalize_pair cross-checks this route against the block
// decomposition. The shape overload is for streaming many pairs.
CanonicalTriple invariant_triple(const FiniteGroup& G, const EndoPair& pair);
CanonicalTriple invariant_triple(const FiniteGroup& G, const HomocyclicShape& shape,
                                 const EndoPair& pair);

// Change of basis making a pair of commuting idempotents act coordinatewise
// on any abelian group: conjugating the pair by w turns both endomorphisms
// into projections onto subsets of the standard cyclic summands, recorded as
// 0/1 coefficient vectors indexed like ppc_decompose(G).
struct Diagonalization {
    Endomorphism w;
    std::vector<int> diag1, diag2;  // 0/1 coefficient per standard summand
};

// Splits the group into the four blocks
//   B1 = g(im f),  B2 = ker(g) within im f,
//   B3 = g(ker f), B4 = ker(g) within ker f,
// on which (f, g) scales by (1,1), (1,0), (0,1), (0,0), concatenates their
// cyclic bases, matches summand orders against the standard decomposition,
// and inverts the resulting change of basis. Validates its own output: the
// conjugated pair is compared against the claimed projections elementwise.
// On homocyclic groups the conjugate is exactly canonical_pair(G, t) for
// t = triple_from_diagonal(result).
Diagonalization diagonalize_pair(const FiniteGroup& G, const EndoPair& pair);

// Per-group tables reused when diagonalizing many pairs on one group.
struct DiagonalizeContext {
    const FiniteGroup* group = nullptr;
    PpcBasis basis;                        // standard decomposition
    std::vector<std::vector<int>> coords;  // element -> summand coordinates
    std::vector<std::vector<int>> mult;    // mult[i][c] = c * basis[i]
    bool homocyclic = false;
    HomocyclicShape shape;  // meaningful only when homocyclic
};
DiagonalizeContext make_diagonalize_context(const FiniteGroup& G);
Diagonalization diagonalize_pair(const DiagonalizeContext& ctx, const EndoPair& pair);

// Block sizes of a diagonal coefficient pair: how many summands are scaled
// (1,1), (1,0), (0,1), (0,0).
std::array<int, 4> diagonal_dims(const Diagonalization& d);

// The triple encoded by a diagonalization; the canonical label of the pair's
// similarity class when the group is homocyclic.
CanonicalTriple triple_from_diagonal(const Diagonalization& d);

// The unique canonical triple whose pair is similar to the given one.
// Homocyclic groups only; validates that the pair consists of commuting
// idempotent endomorphisms, then reads the triple off the three image sizes.
CanonicalTriple canonical_form(const FiniteGroup& G, const EndoPair& pair);

// Order of the general linear group GL_k over the prime field F_p.
std::uint64_t gl_order(int p, int k);

// Exact number of associative pairs whose triple is t, by orbit-stabilizer:
//   p^((exp-1)(r^2 - sum d_i^2)) * |GL_r(F_p)| / prod_i |GL_{d_i}(F_p)|.
std::uint64_t bucket_size_formula(const HomocyclicShape& shape, const CanonicalTriple& t);

// Sum of all bucket sizes: the exact number of associative pairs on the
// group. Cross-validate against count_associative_pairs.
std::uint64_t total_associative_pairs_formula(const HomocyclicShape& shape);

// Class-count bounds for groups whose cyclic decomposition has `rank`
// summands: at most 4^rank associative classes and 2^rank band classes. Both
// are attained on the cyclic group of squarefree order p1*...*p_rank.
std::uint64_t associative_class_bound(int rank);
std::uint64_t band_class_bound(int rank);
std::vector<int> first_primes(int count);
std::uint64_t squarefree_witness_order(int rank);  // product of the first `rank` primes

// Deterministic pseudo-random automorphism of a homocyclic group: a seeded
// r x r matrix over Z_q, re-seeded until invertible mod p.
Endomorphism random_homocyclic_automorphism(const FiniteGroup& G, std::uint64_t seed);

}  // namespace icr
