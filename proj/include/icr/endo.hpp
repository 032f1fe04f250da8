#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "icr/common.hpp"
#include "icr/group.hpp"

namespace icr {

// A group endomorphism stored as its value table: map[x] = f(x).
struct Endomorphism {
    std::vector<elem_t> map;

    int apply(int x) const { return map[x]; }
    bool operator==(const Endomorphism&) const = default;
    auto operator<=>(const Endomorphism&) const = default;  // lexicographic on values
};

// An ordered pair of endomorphisms (f, g). When the pair is image-commuting it
// defines a ring product x*y = f(x) + g(y) on the group; `left` acts on the
// left factor and `right` on the right factor.
struct EndoPair {
    Endomorphism left, right;

    bool operator==(const EndoPair&) const = default;
    auto operator<=>(const EndoPair&) const = default;
};

Endomorphism identity_endo(const FiniteGroup& G);
Endomorphism zero_endo(const FiniteGroup& G);

// Full n^2 homomorphism check of an arbitrary value table.
bool is_endomorphism(const FiniteGroup& G, const std::vector<elem_t>& map);

// x -> f(g(x)).
Endomorphism compose(const FiniteGroup& G, const Endomorphism& f, const Endomorphism& g);

bool is_bijective(const Endomorphism& f);
bool is_automorphism(const FiniteGroup& G, const Endomorphism& f);
Endomorphism inverse_automorphism(const FiniteGroup& G, const Endomorphism& alpha);

// x -> alpha(f(alpha^-1(x))); conjugating both members of a pair by the same
// automorphism gives an isomorphic ring product.
Endomorphism conjugate(const FiniteGroup& G, const Endomorphism& alpha, const Endomorphism& f);
EndoPair conjugate_pair(const FiniteGroup& G, const Endomorphism& alpha, const EndoPair& pr);

bool is_idempotent(const FiniteGroup& G, const Endomorphism& f);
bool commutes(const FiniteGroup& G, const Endomorphism& f, const Endomorphism& g);

// True when every value of f commutes with every value of g in G; the pair
// then defines a product satisfying the interchange law. On failure, *witness
// gets (x, y) with f(x) + g(y) != g(y) + f(x).
bool is_image_commuting(const FiniteGroup& G, const Endomorphism& f, const Endomorphism& g,
                        std::pair<int, int>* witness = nullptr);

// Number of endomorphisms without enumerating them. Abelian groups use the
// gcd product over cyclic summand orders; others enumerate.
std::uint64_t count_endomorphisms(const FiniteGroup& G);

// All endomorphisms in ascending value-table order. Throws CapError when the
// count exceeds kEndoEnumLimit.
std::vector<Endomorphism> enumerate_endomorphisms(const FiniteGroup& G);

// Independent oracle: tries every map with f(0) = 0 by depth-first search with
// prefix pruning. Requires n <= 8.
std::vector<Endomorphism> brute_force_endomorphisms(const FiniteGroup& G);

std::vector<Endomorphism> enumerate_automorphisms(const FiniteGroup& G);

// Index of f in a lexicographically sorted endomorphism list; -1 if absent.
int endo_index(const std::vector<Endomorphism>& sorted, const Endomorphism& f);

// A pair of subgroups (image, kernel) meeting only in 0 with |image| * |kernel|
// equal to the subgroup they decompose; each such pair is one idempotent
// endomorphism (the projection onto image along kernel).
struct SubgroupPair {
    std::uint64_t image_mask, kernel_mask;
};

// All (image, kernel) pairs decomposing the whole group. Abelian, n <= 64.
std::vector<SubgroupPair> complementary_pairs(const FiniteGroup& G);

// The projection p + q -> p for p in image, q in kernel.
Endomorphism projection_endo(const FiniteGroup& G, std::uint64_t image_mask,
                             std::uint64_t kernel_mask);

// All idempotent endomorphisms, ascending. Uses the complementary-subgroup
// route for abelian groups of order <= 64, otherwise filters the endomorphism
// enumeration.
std::vector<Endomorphism> enumerate_idempotents(const FiniteGroup& G);

// Ordered pairs defining associative ring products: image-commuting pairs of
// commuting idempotent endomorphisms. Counted without materializing them on
// abelian groups of order <= 64: for each idempotent e with image P and
// kernel Q, its commuting idempotent partners are exactly the direct sums of
// an idempotent on P and an idempotent on Q.
std::uint64_t count_associative_pairs(const FiniteGroup& G);

// Streams the same ordered pairs. Abelian groups of order <= 64 stream by the
// subgroup-decomposition route; others filter enumerate_idempotents.
void for_each_associative_pair(const FiniteGroup& G,
                               const std::function<void(const EndoPair&)>& fn);

}  // namespace icr
