/**
 * @file test_incidence.cpp
 * @brief Incidence-number tests: the classical plane sequence, the quadric
 *        bi-degree table with its degenerate rows, and the symmetry and
 *        cross-check properties of the quadric solver.
 *
 * Oracle values were evaluated by hand from the degree-splitting recursions
 * before the solvers were written.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charnum/incidence.hpp"

using namespace charnum;

TEST_CASE("plane incidence numbers match the hand-run recursion") {
    auto n = incidence_plane(5);
    REQUIRE(n.size() == 5);
    CHECK(n[0] == std::pair<int, Integer>{1, Integer(1)});
    CHECK(n[1] == std::pair<int, Integer>{2, Integer(1)});
    CHECK(n[2] == std::pair<int, Integer>{3, Integer(12)});
    CHECK(n[3] == std::pair<int, Integer>{4, Integer(620)});
    CHECK(n[4] == std::pair<int, Integer>{5, Integer(87304)});
}

TEST_CASE("quadric incidence numbers: seeds, smooth values, degenerate rows") {
    auto n = incidence_quadric(6);

    // Rulings: exactly one line in each family through a point... with
    // 2(m+n)-1 = 1 point condition.
    CHECK(n.at(quadric_class(1, 0)) == 1);
    CHECK(n.at(quadric_class(0, 1)) == 1);

    // (m,1) classes: graphs over the second ruling; one curve each.
    CHECK(n.at(quadric_class(1, 1)) == 1);
    CHECK(n.at(quadric_class(2, 1)) == 1);
    CHECK(n.at(quadric_class(3, 1)) == 1);

    // Hand-checked smooth values.
    CHECK(n.at(quadric_class(2, 2)) == 12);
    CHECK(n.at(quadric_class(3, 2)) == 96);
    CHECK(n.at(quadric_class(4, 2)) == 640);
    CHECK(n.at(quadric_class(3, 3)) == 3510);

    // Multiples of a single ruling beyond degree one carry no rational
    // curves through general points.
    for (int m = 2; m <= 6; ++m) {
        CHECK(n.at(quadric_class(m, 0)) == 0);
        CHECK(n.at(quadric_class(0, m)) == 0);
    }

    // Ruling symmetry of the whole table.
    for (const auto& [cls, value] : n)
        CHECK(n.at(swapped(cls)) == value);

    // Every class with 1 <= m+n <= cap is present.
    int count = 0;
    for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= 6 - m; ++k)
            if (m + k >= 1) ++count;
    CHECK(static_cast<int>(n.size()) == count);
}

TEST_CASE("quadric solver agrees with its second associativity relation") {
    // The solver cross-checks every degree against an independent relation
    // and throws on disagreement; reaching degree 7 without an exception is
    // the test.
    CHECK_NOTHROW(incidence_quadric(7));
}
