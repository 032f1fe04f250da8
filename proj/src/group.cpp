#include "icr/group.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace icr {

int size_cap() {
    static const int cap = [] {
        const char* env = std::getenv("ICR_CAP");
        if (env == nullptr || *env == '\0') return kDefaultSizeCap;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == nullptr || *end != '\0' || v < 1 || v > 65535) return kDefaultSizeCap;
        return static_cast<int>(v);
    }();
    return cap;
}

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
    std::vector<std::pair<int, int>> out;  // (prime, exponent)
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool compute_abelian(const FiniteGroup& G) {
    for (int x = 0; x < G.n; ++x)
        for (int y = x + 1; y < G.n; ++y)
            if (G.add(x, y) != G.add(y, x)) return false;
    return true;
}

void fill_negatives(FiniteGroup& G) {
    G.neg_table.assign(G.n, 0);
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y)
            if (G.add(x, y) == 0) { G.neg_table[x] = static_cast<elem_t>(y); break; }
}

// k-fold sum x + x + ... + x (k >= 0).
int multiple(const FiniteGroup& G, int x, int k) {
    int acc = 0;
    for (int i = 0; i < k; ++i) acc = G.add(acc, x);
    return acc;
}

}  // namespace

FiniteGroup make_abelian_group(const AbelianSpec& spec, std::string name) {
    long long order = 1;
    for (int f : spec.factors) {
        if (f < 2)
            throw ValidationError("abelian factor must be at least 2, got " + std::to_string(f));
        order *= f;
        if (order > size_cap())
            throw CapError("group order " + std::to_string(order) + " exceeds cap " +
                           std::to_string(size_cap()));
    }
    const int n = static_cast<int>(order);
    const int r = static_cast<int>(spec.factors.size());

    if (name.empty()) {
        if (spec.factors.empty()) {
            name = "Z1";
        } else {
            std::string s;
            for (int i = 0; i < r; ++i) {
                if (i) s += '+';
                s += 'Z' + std::to_string(spec.factors[i]);
            }
            name = s;
        }
    }

    FiniteGroup G;
    G.n = n;
    G.name = std::move(name);
    G.abelian = true;
    G.add_table.assign(static_cast<std::size_t>(n) * n, 0);

    // Mixed radix: the last factor varies fastest.
    std::vector<int> radix(spec.factors.begin(), spec.factors.end());
    auto decode = [&](int x, std::vector<int>& c) {
        for (int i = r - 1; i >= 0; --i) { c[i] = x % radix[i]; x /= radix[i]; }
    };
    auto encode = [&](const std::vector<int>& c) {
        int x = 0;
        for (int i = 0; i < r; ++i) x = x * radix[i] + c[i];
        return x;
    };
    std::vector<int> cx(r), cy(r), cz(r);
    for (int x = 0; x < n; ++x) {
        decode(x, cx);
        for (int y = 0; y < n; ++y) {
            decode(y, cy);
            for (int i = 0; i < r; ++i) cz[i] = (cx[i] + cy[i]) % radix[i];
            G.add_table[static_cast<std::size_t>(x) * n + y] = static_cast<elem_t>(encode(cz));
        }
    }
    fill_negatives(G);
    return G;
}

FiniteGroup make_group_from_table(int n, const std::vector<int>& flat, std::string name) {
    if (n < 1) throw ValidationError("table must have at least one element");
    if (n > size_cap())
        throw CapError("group order " + std::to_string(n) + " exceeds cap " +
                       std::to_string(size_cap()));
    if (flat.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("table is not square: expected " + std::to_string(n) + "x" +
                              std::to_string(n) + " = " + std::to_string(n * n) +
                              " entries, got " + std::to_string(flat.size()));
    for (std::size_t i = 0; i < flat.size(); ++i)
        if (flat[i] < 0 || flat[i] >= n)
            throw ValidationError("table entry out of range at cell " + std::to_string(i) +
                                  ": " + std::to_string(flat[i]));

    auto at = [&](int x, int y) { return flat[static_cast<std::size_t>(x) * n + y]; };

    // Identity must sit at index 0.
    for (int x = 0; x < n; ++x)
        if (at(0, x) != x || at(x, 0) != x)
            throw ValidationError("identity is not at index 0: witness element " +
                                  std::to_string(x));

    // Every element needs a two-sided inverse.
    for (int x = 0; x < n; ++x) {
        bool left = false, right = false;
        for (int y = 0; y < n; ++y) {
            if (at(x, y) == 0) right = true;
            if (at(y, x) == 0) left = true;
        }
        if (!left || !right)
            throw ValidationError("element has no inverse: witness element " + std::to_string(x));
    }

    // Latin square: rows and columns are permutations.
    {
        std::vector<char> seen(n);
        for (int x = 0; x < n; ++x) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int y = 0; y < n; ++y) {
                if (seen[at(x, y)])
                    throw ValidationError("table is not a Latin square: row " + std::to_string(x) +
                                          " repeats value " + std::to_string(at(x, y)));
                seen[at(x, y)] = 1;
            }
        }
        for (int y = 0; y < n; ++y) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int x = 0; x < n; ++x) {
                if (seen[at(x, y)])
                    throw ValidationError("table is not a Latin square: column " +
                                          std::to_string(y) + " repeats value " +
                                          std::to_string(at(x, y)));
                seen[at(x, y)] = 1;
            }
        }
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xy = at(x, y);
            for (int z = 0; z < n; ++z)
                if (at(xy, z) != at(x, at(y, z)))
                    throw ValidationError("operation is not associative: witness (" +
                                          std::to_string(x) + "," + std::to_string(y) + "," +
                                          std::to_string(z) + ")");
        }

    FiniteGroup G;
    G.n = n;
    G.name = std::move(name);
    G.add_table.assign(flat.begin(), flat.end());
    fill_negatives(G);
    G.abelian = compute_abelian(G);
    return G;
}

FiniteGroup parse_cayley_text(const std::string& text, std::string name) {
    std::istringstream in(text);
    long long n = 0;
    if (!(in >> n) || n < 1 || n > 65535)
        throw ParseError("Cayley text must start with the group order");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    long long v = 0;
    while (in >> v) flat.push_back(static_cast<int>(v));
    if (flat.size() != static_cast<std::size_t>(n) * n)
        throw ParseError("Cayley text has " + std::to_string(flat.size()) + " entries, expected " +
                         std::to_string(n * n));
    return make_group_from_table(static_cast<int>(n), flat, std::move(name));
}

FiniteGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_cayley_text(buf.str(), path);
}

std::string format_cayley_text(int n, const std::vector<elem_t>& table) {
    std::string out = std::to_string(n);
    out += '\n';
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (y) out += ' ';
            out += std::to_string(table[static_cast<std::size_t>(x) * n + y]);
        }
        out += '\n';
    }
    return out;
}

namespace {

// Dihedral group of order 2m: pairs (i, j) with i mod m a rotation and j a
// flip bit; (i1,j1)(i2,j2) = (i1 + (-1)^{j1} i2, j1 ^ j2). Index = j*m + i.
std::vector<int> dihedral_table(int m) {
    const int n = 2 * m;
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        int i1 = x % m, j1 = x / m;
        for (int y = 0; y < n; ++y) {
            int i2 = y % m, j2 = y / m;
            int i = ((j1 ? i1 - i2 : i1 + i2) % m + m) % m;
            int j = j1 ^ j2;
            t[static_cast<std::size_t>(x) * n + y] = j * m + i;
        }
    }
    return t;
}

// Quaternion group of order 8: a^i b^j with a^4 = 1, b^2 = a^2, bab^-1 = a^-1.
// Same indexing as the dihedral table plus the b^2 = a^2 twist.
std::vector<int> quaternion_table() {
    const int m = 4, n = 8;
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        int i1 = x % m, j1 = x / m;
        for (int y = 0; y < n; ++y) {
            int i2 = y % m, j2 = y / m;
            int i = (j1 ? i1 - i2 : i1 + i2) + ((j1 && j2) ? 2 : 0);
            i = (i % m + m) % m;
            int j = j1 ^ j2;
            t[static_cast<std::size_t>(x) * n + y] = j * m + i;
        }
    }
    return t;
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
    if (name == "S3") return make_group_from_table(6, dihedral_table(3), "S3");
    if (name == "D4") return make_group_from_table(8, dihedral_table(4), "D4");
    if (name == "Q8") return make_group_from_table(8, quaternion_table(), "Q8");

    // Zn or Za+Zb+...
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos < name.size()) {
        std::size_t next = name.find('+', pos);
        if (next == std::string::npos) next = name.size();
        const std::string tok = name.substr(pos, next - pos);
        if (tok.size() < 2 || tok[0] != 'Z')
            throw ParseError("unknown group name: " + name);
        for (std::size_t i = 1; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw ParseError("unknown group name: " + name);
        factors.push_back(std::stoi(tok.substr(1)));
        pos = next + 1;
        if (next == name.size()) break;
    }
    if (factors.empty()) throw ParseError("unknown group name: " + name);
    if (factors.size() == 1 && factors[0] == 1) {
        return make_abelian_group(AbelianSpec{{}}, "Z1");
    }
    return make_abelian_group(AbelianSpec{factors}, name);
}

FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec.rfind("table:", 0) == 0) return load_group_file(spec.substr(6));
    return builtin_group(spec);
}

int element_order(const FiniteGroup& G, int x) {
    int acc = x, k = 1;
    while (acc != 0) { acc = G.add(acc, x); ++k; }
    return k;
}

namespace {

// Direct-sum basis of the p-primary component `comp` (byte set over G) by
// descending-order greedy choice with backtracking. Each accepted pick x of
// order p^a extends the current span by a free <x> summand; independence of x
// from the span reduces to its unique minimal subgroup generator p^{a-1}x not
// lying in the span.
bool pick_basis(const FiniteGroup& G, int comp_size, int p,
                const std::vector<std::pair<int, int>>& cands,  // (order desc, elem asc)
                std::vector<std::uint8_t>& span, std::vector<int>& span_list,
                std::vector<std::pair<int, int>>& picks) {
    if (static_cast<int>(span_list.size()) == comp_size) return true;
    for (const auto& [ord, x] : cands) {
        if (span[x]) continue;
        if (span[multiple(G, x, ord / p)]) continue;  // span ∩ <x> nontrivial
        const std::size_t old_count = span_list.size();
        int kx = 0;
        for (int k = 1; k < ord; ++k) {
            kx = G.add(kx, x);
            for (std::size_t s = 0; s < old_count; ++s) {
                const int e = G.add(span_list[s], kx);
                span[e] = 1;
                span_list.push_back(e);
            }
        }
        picks.emplace_back(ord, x);
        if (pick_basis(G, comp_size, p, cands, span, span_list, picks)) return true;
        picks.pop_back();
        for (std::size_t s = old_count; s < span_list.size(); ++s) span[span_list[s]] = 0;
        span_list.resize(old_count);
    }
    return false;
}

PpcBasis basis_of_subgroup(const FiniteGroup& G, const std::vector<std::uint8_t>& membership) {
    std::vector<int> elements;
    for (int x = 0; x < G.n; ++x)
        if (membership[x]) elements.push_back(x);
    const int m = static_cast<int>(elements.size());

    PpcBasis out;
    if (m <= 1) return out;

    std::vector<int> ord(G.n, 0);
    for (int x : elements) ord[x] = element_order(G, x);

    // (prime, (order, element) picks) per primary component, primes ascending.
    for (const auto& [p, e] : factorize(m)) {
        std::vector<std::pair<int, int>> cands;
        int comp_size = 0;
        for (int x : elements) {
            int o = ord[x], q = o;
            while (q % p == 0) q /= p;
            if (q == 1) {
                ++comp_size;  // includes 0 (order 1)
                if (o > 1) cands.emplace_back(o, x);
            }
        }
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                  });
        std::vector<std::uint8_t> span(G.n, 0);
        span[0] = 1;
        std::vector<int> span_list{0};
        std::vector<std::pair<int, int>> picks;
        if (!pick_basis(G, comp_size, p, cands, span, span_list, picks))
            throw InternalCheckError("primary component basis search failed");
        std::sort(picks.begin(), picks.end());  // exponent ascending within the prime
        for (const auto& [o, x] : picks) {
            out.orders.push_back(o);
            out.basis.push_back(x);
        }
        (void)e;
    }

    long long prod = 1;
    for (int o : out.orders) prod *= o;
    if (prod != m) throw InternalCheckError("basis orders do not multiply to subgroup size");
    return out;
}

}  // namespace

PpcBasis ppc_decompose(const FiniteGroup& G) {
    if (!G.abelian)
        throw ValidationError("cyclic-summand decomposition requires an abelian group, got " +
                              G.name);
    std::vector<std::uint8_t> all(G.n, 1);
    return basis_of_subgroup(G, all);
}

int ppc_rank(const FiniteGroup& G) { return ppc_decompose(G).rank(); }

PpcBasis subgroup_ppc_basis(const FiniteGroup& G, const std::vector<std::uint8_t>& membership) {
    if (!G.abelian)
        throw ValidationError("cyclic-summand decomposition requires an abelian group");
    return basis_of_subgroup(G, membership);
}

std::vector<std::vector<int>> coordinate_table(const FiniteGroup& G, const PpcBasis& basis) {
    const int r = basis.rank();
    std::vector<std::vector<int>> coords(G.n);
    std::vector<int> c(r, 0);
    std::vector<char> seen(G.n, 0);
    while (true) {
        int x = 0;
        for (int i = 0; i < r; ++i) x = G.add(x, multiple(G, basis.basis[i], c[i]));
        if (seen[x])
            throw InternalCheckError("basis coordinates are not unique at element " +
                                     std::to_string(x));
        seen[x] = 1;
        coords[x] = c;
        int i = r - 1;
        while (i >= 0 && c[i] == basis.orders[i] - 1) { c[i] = 0; --i; }
        if (i < 0) break;
        ++c[i];
    }
    for (int x = 0; x < G.n; ++x)
        if (!seen[x])
            throw InternalCheckError("basis does not span the group at element " +
                                     std::to_string(x));
    return coords;
}

bool is_homocyclic(const FiniteGroup& G, int* p_out, int* n_out, int* r_out) {
    if (!G.abelian) return false;
    const PpcBasis b = ppc_decompose(G);
    if (b.rank() == 0) {
        if (p_out) *p_out = 0;
        if (n_out) *n_out = 0;
        if (r_out) *r_out = 0;
        return true;
    }
    for (int o : b.orders)
        if (o != b.orders[0]) return false;
    const auto f = factorize(b.orders[0]);
    if (f.size() != 1) return false;
    if (p_out) *p_out = f[0].first;
    if (n_out) *n_out = f[0].second;
    if (r_out) *r_out = b.rank();
    return true;
}

std::vector<int> mask_elements(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        const int b = std::countr_zero(mask);
        out.push_back(b);
        mask &= mask - 1;
    }
    return out;
}

std::vector<std::uint64_t> enumerate_subgroup_masks(const FiniteGroup& G) {
    if (G.n > 64) throw CapError("subgroup mask enumeration requires order <= 64");
    const std::uint64_t trivial = 1ull;

    auto close_over = [&](std::uint64_t base, int g) -> std::uint64_t {
        if (G.abelian) {
            // <base, g> = union over k of base + k*g
            std::uint64_t out = 0;
            const int og = element_order(G, g);
            int kg = 0;
            for (int k = 0; k < og; ++k) {
                for (int s : mask_elements(base)) out |= 1ull << G.add(s, kg);
                kg = G.add(kg, g);
            }
            return out;
        }
        std::uint64_t out = base | (1ull << g);
        bool grew = true;
        while (grew) {
            grew = false;
            const auto elems = mask_elements(out);
            for (int a : elems)
                for (int b : elems) {
                    const std::uint64_t bit = 1ull << G.add(a, b);
                    if (!(out & bit)) { out |= bit; grew = true; }
                }
        }
        return out;
    };

    std::set<std::uint64_t> seen{trivial};
    std::vector<std::uint64_t> queue{trivial};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const std::uint64_t S = queue[q];
        for (int g = 1; g < G.n; ++g) {
            if (S & (1ull << g)) continue;
            const std::uint64_t T = close_over(S, g);
            if (seen.insert(T).second) queue.push_back(T);
        }
    }
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

std::vector<FiniteGroup> abelian_groups_of_order(int k) {
    if (k < 1) throw ValidationError("order must be positive");
    if (k > size_cap())
        throw CapError("order " + std::to_string(k) + " exceeds cap " + std::to_string(size_cap()));
    if (k == 1) return {builtin_group("Z1")};

    // Partitions of each prime exponent, combined into invariant factors.
    const auto fact = factorize(k);
    std::vector<std::vector<std::vector<int>>> parts_per_prime;  // partitions, each desc
    for (const auto& [p, e] : fact) {
        (void)p;
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rest, int maxpart) -> void {
            if (rest == 0) { parts.push_back(cur); return; }
            for (int next = std::min(rest, maxpart); next >= 1; --next) {
                cur.push_back(next);
                self(self, rest - next, next);
                cur.pop_back();
            }
        };
        rec(rec, e, e);
        parts_per_prime.push_back(std::move(parts));
    }

    std::vector<FiniteGroup> out;
    std::vector<std::size_t> idx(fact.size(), 0);
    while (true) {
        // Invariant factors: d_i = prod over primes of p^(i-th largest exponent).
        std::size_t rank = 0;
        for (std::size_t i = 0; i < fact.size(); ++i)
            rank = std::max(rank, parts_per_prime[i][idx[i]].size());
        std::vector<int> inv(rank, 1);
        for (std::size_t i = 0; i < fact.size(); ++i) {
            const auto& part = parts_per_prime[i][idx[i]];
            for (std::size_t j = 0; j < part.size(); ++j) {
                int pe = 1;
                for (int t = 0; t < part[j]; ++t) pe *= fact[i].first;
                inv[j] *= pe;
            }
        }
        out.push_back(make_abelian_group(AbelianSpec{inv}));

        std::size_t i = 0;
        while (i < idx.size() && idx[i] + 1 == parts_per_prime[i].size()) { idx[i] = 0; ++i; }
        if (i == idx.size()) break;
        ++idx[i];
    }
    std::sort(out.begin(), out.end(),
              [](const FiniteGroup& a, const FiniteGroup& b) { return a.name < b.name; });
    return out;
}

OrderCorpus groups_of_order(int k) {
    OrderCorpus corpus;
    corpus.groups = abelian_groups_of_order(k);
    if (k == 6) corpus.groups.push_back(builtin_group("S3"));
    if (k == 8) {
        corpus.groups.push_back(builtin_group("D4"));
        corpus.groups.push_back(builtin_group("Q8"));
    }
    const auto fact = factorize(k);
    const bool prime_square = fact.size() == 1 && fact[0].second == 2;
    corpus.complete = (k <= 8) || is_prime(k) || prime_square || k == 15;
    return corpus;
}

}  // namespace icr
