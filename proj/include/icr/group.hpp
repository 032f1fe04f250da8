#pragma once

// Finite groups as dense Cayley tables with elements indexed 0..n-1 and the
// identity fixed at index 0, plus decomposition of finite abelian groups into
// prime-power cyclic summands.

#include <cstdint>
#include <string>
#include <vector>

#include "icr/common.hpp"

namespace icr {

using elem_t = std::uint16_t;

struct FiniteGroup {
    int n = 0;                        // order
    std::vector<elem_t> add_table;    // n*n, row-major: add_table[x*n+y] = x+y
    std::vector<elem_t> neg_table;    // neg_table[x] = -x
    bool abelian = false;
    std::string name;

    int add(int x, int y) const { return add_table[static_cast<std::size_t>(x) * n + y]; }
    int neg(int x) const { return neg_table[x]; }
    int sub(int x, int y) const { return add(x, neg(y)); }
    bool same_table(const FiniteGroup& o) const {
        return n == o.n && add_table == o.add_table;
    }
};

// Direct sum of cyclic groups Z_f1 + Z_f2 + ...; every factor must be >= 2.
struct AbelianSpec {
    std::vector<int> factors;
};

// Mixed-radix construction. Element index encodes coordinates with the last
// factor varying fastest. Throws ValidationError (factor < 2) or CapError.
FiniteGroup make_abelian_group(const AbelianSpec& spec, std::string name = "");

// Validates a dense table as a group: square shape, identity at index 0,
// inverses, Latin square, associativity — each failure is a distinct
// ValidationError with a witness. Throws CapError when n exceeds the cap.
FiniteGroup make_group_from_table(int n, const std::vector<int>& flat, std::string name = "table");

// Cayley text format: first line n, then n whitespace-separated rows; row x
// lists x+y for y = 0..n-1.
FiniteGroup parse_cayley_text(const std::string& text, std::string name = "table");
FiniteGroup load_group_file(const std::string& path);
std::string format_cayley_text(int n, const std::vector<elem_t>& table);

// Built-in groups by name: "Z1", "Zn", "Za+Zb+...", "S3", "D4", "Q8".
FiniteGroup builtin_group(const std::string& name);

// Group spec grammar accepted by the CLI: a built-in name or "table:<path>".
FiniteGroup parse_group_spec(const std::string& spec);

int element_order(const FiniteGroup& G, int x);

// Basis of an abelian group by prime-power cyclic summands: element basis[i]
// generates a Z_{orders[i]} summand; orders sorted by (prime asc, exponent
// asc). The trivial group has an empty basis.
struct PpcBasis {
    std::vector<int> basis;
    std::vector<int> orders;
    int rank() const { return static_cast<int>(basis.size()); }
};

PpcBasis ppc_decompose(const FiniteGroup& G);  // ValidationError if non-abelian
int ppc_rank(const FiniteGroup& G);

// coords[x] = coordinates of x in the given basis (coords[x][i] in
// [0, orders[i])); every element has exactly one coordinate tuple.
std::vector<std::vector<int>> coordinate_table(const FiniteGroup& G, const PpcBasis& basis);

// True iff G is a direct sum of r copies of Z_{p^n}; outputs may be null.
// The trivial group reports true with p = 0, n = 0, r = 0.
bool is_homocyclic(const FiniteGroup& G, int* p_out = nullptr, int* n_out = nullptr,
                   int* r_out = nullptr);

// ---- subgroup machinery -----------------------------------------------------

// All subgroups of G as sorted element lists (each list ascending; the list of
// subgroups ordered by size then lexicographically). Works for any G with
// n <= 64 via bitmasks; intended for the small-group lattice work.
std::vector<std::uint64_t> enumerate_subgroup_masks(const FiniteGroup& G);
std::vector<int> mask_elements(std::uint64_t mask);

// Prime-power cyclic basis of a subgroup of an abelian G, given as a byte set
// (membership[x] != 0). Same ordering conventions as ppc_decompose.
PpcBasis subgroup_ppc_basis(const FiniteGroup& G, const std::vector<std::uint8_t>& membership);

// ---- order corpus -----------------------------------------------------------

// Groups of a given order for census work. `complete` is true only when the
// list provably contains every isomorphism class of that order (k <= 8,
// k prime, k = p^2, k = 15); otherwise the list covers the abelian classes.
struct OrderCorpus {
    std::vector<FiniteGroup> groups;
    bool complete = false;
};
OrderCorpus groups_of_order(int k);

// All abelian groups of order k, one per isomorphism class, named by invariant
// factors ("Z6", "Z4+Z2", ...).
std::vector<FiniteGroup> abelian_groups_of_order(int k);

}  // namespace icr
