#pragma once

#include <cstdint>
#include <vector>

#include "icr/interchange.hpp"

namespace icr {

// Subgroup and ideal tests take element sets as bitmasks (group order <= 64
// for enumeration; membership tests accept any order <= 64).

bool is_subgroup_mask(const FiniteGroup& G, std::uint64_t mask);
bool is_normal_subgroup(const FiniteGroup& G, std::uint64_t mask);

// An ideal is a normal subgroup I with left(I) and right(I) inside I, where
// (left, right) is the defining pair of the product. Exactly these subsets
// yield a well-defined quotient product on cosets.
bool is_ideal(const InterchangeRing& R, std::uint64_t mask);

// All ideals, ascending by (size, mask).
std::vector<std::uint64_t> enumerate_ideal_masks(const InterchangeRing& R);

// Quotient ring by an ideal. Coset 0 is the coset of 0; the rest are numbered
// by their least member, ascending. Fills *class_of with the coset index of
// each element when requested. Validates well-definedness of both operations
// by literal sweeps over all element pairs.
InterchangeRing quotient_ring(const InterchangeRing& R, std::uint64_t ideal_mask,
                              std::vector<int>* class_of = nullptr);

// No ideals besides 0 and R (and more than one element).
bool is_simple(const InterchangeRing& R);

// Maximality of a proper ideal, two independent routes: directly (no strictly
// larger proper ideal contains it) and via simplicity of the quotient.
bool is_maximal_ideal_direct(const InterchangeRing& R, std::uint64_t mask);
bool is_maximal_ideal_via_quotient(const InterchangeRing& R, std::uint64_t mask);

// The ring of m x m matrices over R: entries added coordinatewise, product
// (A*B)_ij = sum_k A_ik * B_kj with k ascending. A matrix maps to its index
// by digits: index = sum_ij A_ij * |R|^(i*m + j). The result is again a ring
// of the same kind (its product satisfies the interchange law), which
// matrix_ring verifies before returning.
InterchangeRing matrix_ring(const InterchangeRing& R, int m);

// k-ary version of the defining law: (x1+...+xk)*(y1+...+yk) =
// x1*y1 + ... + xk*yk. Exhaustive when |G|^(2k) <= 2'000'000, otherwise 4096
// reproducibly seeded tuples.
bool check_kfold_identity(const InterchangeRing& R, int arity);

// Complete law check for the m x m matrix ring over R, factored through one
// entry: position (i,j) of both sides of (W+X)*(Y+Z) = W*Y + X*Z depends only
// on rows i of W,X and columns j of Y,Z, and the resulting identity in 4m
// ring values is the same at every position. Sweeping all |R|^(4m)
// assignments is therefore equivalent to checking the law over every matrix
// quadruple. Throws CapError when |R|^(4m) exceeds 2^24.
bool matrix_law_entrywise(const InterchangeRing& R, int m);

}  // namespace icr
