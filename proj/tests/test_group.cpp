#include <string>
#include <vector>

#include "doctest.h"
#include "icr/group.hpp"

using namespace icr;

TEST_CASE("mixed-radix abelian construction") {
    FiniteGroup Z6 = make_abelian_group(AbelianSpec{{6}}, "Z6");
    CHECK(Z6.n == 6);
    CHECK(Z6.abelian);
    CHECK(Z6.add(1, 5) == 0);
    CHECK(Z6.add(4, 4) == 2);
    CHECK(Z6.neg(2) == 4);
    CHECK(Z6.sub(1, 5) == 2);
    CHECK(builtin_group("Z6").same_table(Z6));

    // Z2 x Z3 is isomorphic to Z6 but indexes elements by coordinates, with
    // the last factor fastest.
    FiniteGroup M = make_abelian_group(AbelianSpec{{2, 3}});
    CHECK(M.n == 6);
    CHECK(M.add(1, 2) == 0);   // (0,1) + (0,2) = (0,0)
    CHECK(M.add(3, 4) == 1);   // (1,0) + (1,1) = (0,1)
    CHECK_FALSE(M.same_table(Z6));

    CHECK_THROWS_AS(make_abelian_group(AbelianSpec{{1, 2}}), ValidationError);
    CHECK_THROWS_AS(make_abelian_group(AbelianSpec{{257}}), CapError);
    CHECK_THROWS_AS(builtin_group("Z257"), CapError);
    CHECK_THROWS_AS(builtin_group("nonsense"), ParseError);
}

TEST_CASE("the smallest nonabelian group") {
    FiniteGroup S3 = builtin_group("S3");
    CHECK(S3.n == 6);
    CHECK_FALSE(S3.abelian);
    const std::vector<elem_t> want = {0, 1, 2, 3, 4, 5, 1, 2, 0, 4, 5, 3, 2, 0, 1, 5, 3, 4,
                                      3, 5, 4, 0, 2, 1, 4, 3, 5, 1, 0, 2, 5, 4, 3, 2, 1, 0};
    CHECK(S3.add_table == want);
    // Fixed element orders: identity, two 3-cycles, three transpositions.
    const std::vector<int> orders = {1, 3, 3, 2, 2, 2};
    for (int x = 0; x < 6; ++x) CHECK(element_order(S3, x) == orders[x]);
    CHECK(enumerate_subgroup_masks(S3).size() == 6);
}

TEST_CASE("table validation names the failing axiom") {
    // 2x2 table with 3 entries
    CHECK_THROWS_WITH_AS(make_group_from_table(2, {0, 1, 1}), doctest::Contains("entries"),
                         ValidationError);
    // out-of-range value
    CHECK_THROWS_WITH_AS(make_group_from_table(2, {0, 1, 1, 2}), doctest::Contains("range"),
                         ValidationError);
    // row 0 is not the identity row
    CHECK_THROWS_WITH_AS(make_group_from_table(2, {1, 0, 0, 1}), doctest::Contains("identity"),
                         ValidationError);
    // no inverse: row 2 never reaches 0
    CHECK_THROWS_WITH_AS(
        make_group_from_table(4, {0, 1, 2, 3, 1, 2, 3, 0, 2, 2, 2, 2, 3, 0, 1, 2}),
        doctest::Contains("inverse"), ValidationError);
    // inverses exist but row 2 repeats a value
    CHECK_THROWS_WITH_AS(
        make_group_from_table(4, {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 2, 3, 0, 1, 2}),
        doctest::Contains("Latin"), ValidationError);
    // identity-with-inverses Latin square of order 5 that is not associative
    const std::vector<int> loop5 = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 3, 4, 0, 1,
                                    3, 4, 1, 2, 0, 4, 2, 0, 1, 3};
    CHECK_THROWS_WITH_AS(make_group_from_table(5, loop5), doctest::Contains("associative"),
                         ValidationError);
    CHECK_THROWS_AS(make_group_from_table(300, std::vector<int>(300 * 300, 0)), CapError);
}

TEST_CASE("Cayley text round trip and table files") {
    FiniteGroup S3 = builtin_group("S3");
    const std::string text = format_cayley_text(S3.n, S3.add_table);
    FiniteGroup back = parse_cayley_text(text, "S3");
    CHECK(back.same_table(S3));
    CHECK_FALSE(back.abelian);

    FiniteGroup D4 = load_group_file(std::string(ICR_DATA_DIR) + "/d4.table");
    CHECK(D4.n == 8);
    CHECK_FALSE(D4.abelian);
    CHECK(D4.same_table(builtin_group("D4")));

    FiniteGroup Q8 = load_group_file(std::string(ICR_DATA_DIR) + "/q8.table");
    CHECK(Q8.n == 8);
    CHECK_FALSE(Q8.abelian);
    CHECK(Q8.same_table(builtin_group("Q8")));

    CHECK(parse_group_spec("table:" + std::string(ICR_DATA_DIR) + "/d4.table").same_table(D4));
    CHECK_THROWS_AS(load_group_file("/nonexistent/file.table"), ParseError);
}

TEST_CASE("prime-power cyclic decomposition") {
    // Orders sorted by (prime ascending, exponent ascending).
    CHECK(ppc_decompose(builtin_group("Z12")).orders == std::vector<int>{4, 3});
    CHECK(ppc_decompose(builtin_group("Z4+Z2")).orders == std::vector<int>{2, 4});
    CHECK(ppc_decompose(builtin_group("Z2+Z2+Z2")).orders == std::vector<int>{2, 2, 2});
    CHECK(ppc_decompose(builtin_group("Z1")).rank() == 0);
    CHECK(ppc_rank(builtin_group("Z30")) == 3);
    CHECK_THROWS_AS(ppc_decompose(builtin_group("S3")), ValidationError);

    int p = 0, e = 0, r = 0;
    CHECK(is_homocyclic(builtin_group("Z4+Z4"), &p, &e, &r));
    CHECK(p == 2);
    CHECK(e == 2);
    CHECK(r == 2);
    CHECK_FALSE(is_homocyclic(builtin_group("Z6")));
    CHECK_FALSE(is_homocyclic(builtin_group("Z4+Z2")));
    CHECK(is_homocyclic(builtin_group("Z1"), &p, &e, &r));
    CHECK(r == 0);

    // Every element gets exactly one coordinate tuple.
    FiniteGroup G = builtin_group("Z4+Z2");
    PpcBasis b = ppc_decompose(G);
    auto coords = coordinate_table(G, b);
    CHECK(static_cast<int>(coords.size()) == G.n);
    for (int x = 0; x < G.n; ++x) {
        int v = 0;
        for (int i = 0; i < b.rank(); ++i)
            for (int c = 0; c < coords[x][i]; ++c) v = G.add(v, b.basis[i]);
        CHECK(v == x);
    }
}

TEST_CASE("subgroup bases and lattices") {
    FiniteGroup Z6 = builtin_group("Z6");
    std::vector<std::uint8_t> members(6, 0);
    members[0] = members[3] = 1;  // the order-2 subgroup {0, 3}
    PpcBasis sb = subgroup_ppc_basis(Z6, members);
    CHECK(sb.orders == std::vector<int>{2});
    CHECK(sb.basis == std::vector<int>{3});

    CHECK(enumerate_subgroup_masks(builtin_group("Z2+Z2+Z2")).size() == 16);
    CHECK(enumerate_subgroup_masks(builtin_group("Z4+Z2")).size() == 8);
    CHECK_THROWS_AS(enumerate_subgroup_masks(builtin_group("Z128")), CapError);
}

TEST_CASE("order corpus") {
    OrderCorpus c6 = groups_of_order(6);
    CHECK(c6.complete);
    CHECK(c6.groups.size() == 2);  // Z6 and S3

    OrderCorpus c8 = groups_of_order(8);
    CHECK(c8.complete);
    CHECK(c8.groups.size() == 5);  // Z8, Z4+Z2, Z2^3, D4, Q8

    CHECK(groups_of_order(15).complete);
    CHECK(groups_of_order(15).groups.size() == 1);
    CHECK(groups_of_order(25).complete);  // p^2 orders are abelian
    CHECK(groups_of_order(25).groups.size() == 2);
    CHECK_FALSE(groups_of_order(12).complete);

    CHECK(abelian_groups_of_order(16).size() == 5);
    CHECK(abelian_groups_of_order(64).size() == 11);
    CHECK(abelian_groups_of_order(1).size() == 1);
}
