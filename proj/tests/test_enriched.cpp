/**
 * @file test_enriched.cpp
 * @brief Tests of the enriched series: the P0 + Q0 = 0 identity, frozen
 *        hand-expanded low-degree slices on the plane, vanishing of the
 *        small-class slices with negative strata, and the quadric symmetry
 *        properties.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>

#include "charnum/enriched.hpp"
#include "charnum/tangency.hpp"
#include "charnum/targets.hpp"

using namespace charnum;

namespace {

std::map<ExponentTuple, Rational> n_slice(const Potential& p, CurveClass cls) {
    std::map<ExponentTuple, Rational> out;
    auto it = p.slices.find(cls);
    if (it == p.slices.end()) return out;
    for (const auto& [e, value] : it->second) out[e] = coefficient(p, cls, e);
    return out;
}

}  // namespace

TEST_CASE("P0 + Q0 vanishes identically on both targets") {
    for (Target t : {Target::Plane, Target::Quadric}) {
        Potential g = build_G(t, 4);
        EnrichedSet e = build_enriched(g);
        CHECK(is_zero(e.p0 + e.q0));
        CHECK(same_series(e.q0, scale(e.p0, -1)));
    }
}

TEST_CASE("plane P0: conic slice matches the hand expansion") {
    Potential g = build_G(Target::Plane, 2);
    EnrichedSet e = build_enriched(g);

    // Degree 1 admits no class splitting, so the quadratic closed form is
    // empty there.
    CHECK(e.p0.slices.find(plane_class(1)) == e.p0.slices.end());

    std::map<ExponentTuple, Rational> conic{
        {{4, 0, 0}, 3}, {{3, 1, 0}, 6}, {{2, 2, 0}, 4},
        {{2, 0, 1}, 3}, {{1, 1, 1}, 2}, {{0, 0, 2}, 1},
    };
    CHECK(n_slice(e.p0, plane_class(2)) == conic);
}

TEST_CASE("plane P1/P2/Q1/Q2: hand-expanded small slices") {
    Potential g = build_G(Target::Plane, 2);
    EnrichedSet e = build_enriched(g);

    // The stored higher members are double s-derivatives.  At degree 1 the
    // P-members have no quadratic contribution and P2/Q2 sit on a negative
    // stratum, so those slices are empty.
    CHECK(e.p1.slices.find(plane_class(1)) == e.p1.slices.end());
    CHECK(e.p2.slices.find(plane_class(1)) == e.p2.slices.end());
    CHECK(e.q2.slices.find(plane_class(1)) == e.q2.slices.end());

    // Q1_ss at degree 1 reduces to -2 G_ws - G_wss = -3 on the empty tuple.
    std::map<ExponentTuple, Rational> q1_line{{{0, 0, 0}, -3}};
    CHECK(n_slice(e.q1, plane_class(1)) == q1_line);

    // Degree 2, expanded by hand from the defining differential polynomials
    // (ordinary coefficients of G at degrees 1 and 2).
    std::map<ExponentTuple, Rational> p2_conic{{{2, 0, 0}, 4}};
    CHECK(n_slice(e.p2, plane_class(2)) == p2_conic);

    std::map<ExponentTuple, Rational> q2_conic{
        {{2, 0, 0}, 4}, {{1, 1, 0}, 4}, {{0, 2, 0}, 2}, {{0, 0, 1}, 2},
    };
    CHECK(n_slice(e.q2, plane_class(2)) == q2_conic);
}

TEST_CASE("every enriched member sits on its admissibility stratum") {
    for (Target t : {Target::Plane, Target::Quadric}) {
        EnrichedSet e = build_enriched(build_G(t, 4));
        for (const Potential* p : {&e.p0, &e.p1, &e.p2, &e.q0, &e.q1, &e.q2})
            CHECK_NOTHROW(assert_on_stratum(*p));
    }
}

TEST_CASE("quadric enriched series are symmetric under the ruling swap") {
    EnrichedSet e = build_enriched(build_G(Target::Quadric, 4));
    for (const Potential* p : {&e.p0, &e.p1, &e.p2, &e.q0, &e.q1, &e.q2})
        CHECK(same_series(swap_series(*p), *p));
}

TEST_CASE("series dispatch rejects foreign kinds") {
    Potential g = build_G(Target::Plane, 2);
    CHECK_THROWS_AS(p_series(g, Kind::P12), std::invalid_argument);  // quadric kind
    CHECK_THROWS_AS(p_series(g, Kind::Q1), std::invalid_argument);   // not a P-kind
    CHECK_THROWS_AS(q_series(g, Kind::P0), std::invalid_argument);
    CHECK(same_series(p_series(g, Kind::P0), build_enriched(g).p0));
}
