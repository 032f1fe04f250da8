#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "icr/interchange.hpp"
#include "icr/notation.hpp"

using namespace icr;

namespace {

// All image-commuting endomorphism pairs, i.e. the full set of valid rings.
std::vector<EndoPair> all_pairs(const FiniteGroup& G) {
    auto endos = enumerate_endomorphisms(G);
    std::vector<EndoPair> out;
    for (const Endomorphism& f : endos)
        for (const Endomorphism& g : endos)
            if (is_image_commuting(G, f, g)) out.push_back({f, g});
    return out;
}

}  // namespace

TEST_CASE("a worked product table on the Klein group") {
    FiniteGroup V = builtin_group("Z2+Z2");
    EndoPair p = parse_pair(V, "(0022),(0101)");
    InterchangeRing R = build_from_pair(V, p);
    // x * y = left(x) + right(y): first coordinate from y, second from x.
    CHECK(R.mul(0, 0) == 0);
    CHECK(R.mul(1, 0) == 0);  // left(1) = 0
    CHECK(R.mul(0, 1) == 1);  // right(1) = 1
    CHECK(R.mul(2, 1) == 3);  // 2 + 1
    CHECK(R.mul(3, 3) == 3);
    CHECK(R.mul(1, 2) == 0);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(R.mul(x, y) == V.add(p.left.map[x], p.right.map[y]));
}

TEST_CASE("extract is a left inverse of build") {
    for (const char* name : {"S3", "Z2+Z2", "Z6", "Z4"}) {
        FiniteGroup G = builtin_group(name);
        auto pairs = all_pairs(G);
        for (const EndoPair& p : pairs) {
            InterchangeRing R = build_from_pair(G, p);
            CHECK(extract_pair(R) == p);
            CHECK(check_interchange_law(G, R.prod).ok);
            CHECK(brute_force_interchange_law(G, R.prod));
            CHECK(check_basic_identities(R));
        }
    }
    // sanity on the counts those loops covered
    CHECK(all_pairs(builtin_group("S3")).size() == 22);
    CHECK(all_pairs(builtin_group("Z2+Z2")).size() == 256);
}

TEST_CASE("build rejects maps that are not endomorphisms") {
    FiniteGroup V = builtin_group("Z2+Z2");
    EndoPair bad;
    bad.left.map = {1, 0, 0, 0};  // moves the identity
    bad.right = zero_endo(V);
    CHECK_THROWS_AS(build_from_pair(V, bad), ValidationError);

    // On a nonabelian group the identity map does not commute with itself
    // image-wise, so the double-identity pair defines no ring.
    FiniteGroup S3 = builtin_group("S3");
    EndoPair ii{identity_endo(S3), identity_endo(S3)};
    CHECK_THROWS_AS(build_from_pair(S3, ii), ValidationError);
}

TEST_CASE("the law check agrees with the quadruple sweep on mutated tables") {
    FiniteGroup S3 = builtin_group("S3");
    auto pairs = all_pairs(S3);
    REQUIRE(pairs.size() == 22);
    std::mt19937 rng(20260816u);
    for (const EndoPair& p : pairs) {
        InterchangeRing R = build_from_pair(S3, p);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<elem_t> mutated = R.prod;
            std::size_t cell = rng() % mutated.size();
            int delta = 1 + static_cast<int>(rng() % (S3.n - 1));
            mutated[cell] = static_cast<elem_t>((mutated[cell] + delta) % S3.n);
            LawCheckResult fast = check_interchange_law(S3, mutated);
            std::array<int, 4> w{};
            bool brute = brute_force_interchange_law(S3, mutated, &w);
            CHECK(fast.ok == brute);
            if (!fast.ok) {
                CHECK_FALSE(fast.reason.empty());
                // the returned witness must literally violate the law
                auto viol = [&](const std::array<int, 4>& q) {
                    int lhs = mutated[static_cast<std::size_t>(S3.add(q[0], q[1])) * S3.n +
                                      S3.add(q[2], q[3])];
                    int rhs = S3.add(mutated[static_cast<std::size_t>(q[0]) * S3.n + q[2]],
                                     mutated[static_cast<std::size_t>(q[1]) * S3.n + q[3]]);
                    return lhs != rhs;
                };
                CHECK(viol(fast.witness));
                CHECK(viol(w));
            }
        }
    }
}

TEST_CASE("ring_from_table accepts exactly the lawful tables") {
    FiniteGroup V = builtin_group("Z2+Z2");
    InterchangeRing R = build_from_pair(V, parse_pair(V, "(0022),(0101)"));
    InterchangeRing R2 = ring_from_table(V, R.prod);
    CHECK(R2.prod == R.prod);
    CHECK(extract_pair(R2) == extract_pair(R));

    std::vector<elem_t> bad = R.prod;
    bad[5] = static_cast<elem_t>((bad[5] + 1) % V.n);
    CHECK_THROWS_AS(ring_from_table(V, bad), ValidationError);
    CHECK_THROWS_AS(ring_from_table(V, std::vector<elem_t>(3, 0)), ValidationError);
}

TEST_CASE("structural properties match the table oracle everywhere") {
    for (const char* name : {"S3", "Z2+Z2"}) {
        FiniteGroup G = builtin_group(name);
        for (const EndoPair& p : all_pairs(G)) {
            InterchangeRing R = build_from_pair(G, p);
            RingProperties a = pair_properties(G, p);
            RingProperties b = magma_properties_oracle(R);
            CHECK(a.commutative == b.commutative);
            CHECK(a.associative == b.associative);
            CHECK(a.idempotent_product == b.idempotent_product);
            CHECK(a.band == b.band);
            CHECK(a.proper == b.proper);
            CHECK(a.zero_semigroup == b.zero_semigroup);
            CHECK(a.essential == b.essential);
            CHECK(a.band == (a.associative && a.idempotent_product));
        }
    }
}

TEST_CASE("the four degenerate products and their tie-breaking") {
    FiniteGroup Z4 = builtin_group("Z4");
    Endomorphism z = zero_endo(Z4), id = identity_endo(Z4);
    CHECK(essential_kind(Z4, {z, z}) == EssentialKind::zero);
    CHECK(essential_kind(Z4, {id, z}) == EssentialKind::left_factor);
    CHECK(essential_kind(Z4, {z, id}) == EssentialKind::right_factor);
    CHECK(essential_kind(Z4, {id, id}) == EssentialKind::addition);
    CHECK(essential_kind(Z4, {parse_endo(Z4, "(0202)"), z}) == EssentialKind::none);

    FiniteGroup V = builtin_group("Z2+Z2");
    Endomorphism d1 = parse_endo(V, "(0022)");
    CHECK(essential_kind(V, {d1, d1}) == EssentialKind::none);

    // In the one-element group all four coincide; zero wins the tie.
    FiniteGroup Z1 = builtin_group("Z1");
    CHECK(essential_kind(Z1, {zero_endo(Z1), zero_endo(Z1)}) == EssentialKind::zero);

    CHECK(std::string(essential_kind_name(EssentialKind::none)) == "none");
    CHECK(std::string(essential_kind_name(EssentialKind::zero)) == "zero");
    CHECK(std::string(essential_kind_name(EssentialKind::left_factor)) == "left_factor");
    CHECK(std::string(essential_kind_name(EssentialKind::right_factor)) == "right_factor");
    CHECK(std::string(essential_kind_name(EssentialKind::addition)) == "addition");
}

TEST_CASE("absorbing elements exist exactly in zero semigroups") {
    for (const char* name : {"Z2+Z2", "S3", "Z6"}) {
        FiniteGroup G = builtin_group(name);
        for (const EndoPair& p : all_pairs(G)) {
            InterchangeRing R = build_from_pair(G, p);
            auto a = find_absorbing_element(R);
            bool zero_sg = pair_properties(G, p).zero_semigroup;
            CHECK(a.has_value() == zero_sg);
            if (a) CHECK(*a == 0);
        }
    }
}
