/**
 * @file test_flex.cpp
 * @brief Triple-contact potential tests: the contact-hypothesis exclusions,
 *        the intersection-multiplicity vanishing slices, quadratic behavior
 *        in the degree of the fixed curve, and the quadric symmetry.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "charnum/flex.hpp"
#include "charnum/tangency.hpp"
#include "charnum/targets.hpp"

using namespace charnum;

TEST_CASE("plane triple-contact potentials for z = 1, 2, 3") {
    Potential g = build_G(Target::Plane, 4);
    EnrichedSet e = build_enriched(g);
    Potential f1 = flex_plane(g, e, 1);
    Potential f2 = flex_plane(g, e, 2);
    Potential f3 = flex_plane(g, e, 3);

    CHECK(f1.kind == Kind::F);
    CHECK_NOTHROW(assert_on_stratum(f1));

    // The contact hypothesis fails for lines, so the degree-1 slice is
    // computed but never published.
    for (const Potential* f : {&f1, &f2, &f3})
        CHECK(f->slices.find(plane_class(1)) == f->slices.end());

    // A conic meets a line with total multiplicity 2 < 3: no triple contact.
    CHECK(f1.slices.find(plane_class(2)) == f1.slices.end());

    // The assembly is quadratic in z with no constant term, so three values
    // determine the rest: F3 = 3 F2 - 3 F1 and F4 = 6 F2 - 8 F1.
    CHECK(same_series(f3, add(scale(f2, 3), f1, -3)));
    CHECK(same_series(flex_plane(g, e, 4), add(scale(f2, 6), f1, -8)));

    CHECK_THROWS_AS(flex_plane(g, e, 0), std::invalid_argument);
    CHECK_THROWS_AS(flex_plane(build_G(Target::Quadric, 2),
                               build_enriched(build_G(Target::Quadric, 2)), 1),
                    std::invalid_argument);
}

TEST_CASE("plane flex counts are nonnegative integers on the published slices") {
    Potential g = build_G(Target::Plane, 4);
    Potential f1 = flex_plane(g, build_enriched(g), 1);
    for (const auto& [cls, cells] : f1.slices)
        for (const auto& [e, value] : cells) {
            Rational n = coefficient(f1, cls, e);
            CHECK(is_integral(n));
            CHECK(n >= 0);
        }
}

TEST_CASE("quadric triple-contact potential") {
    Potential g = build_G(Target::Quadric, 4);
    EnrichedSet e = build_enriched(g);
    Potential f = flex_quadric(g, e);

    CHECK(f.kind == Kind::F);
    CHECK_NOTHROW(assert_on_stratum(f));
    CHECK(same_series(swap_series(f), f));

    // A (1,0)-line meets the fixed (1,1)-curve with multiplicity 1, and a
    // (1,1)-curve meets it with multiplicity 2: both below contact order 3.
    CHECK(f.slices.find(quadric_class(1, 0)) == f.slices.end());
    CHECK(f.slices.find(quadric_class(0, 1)) == f.slices.end());
    CHECK(f.slices.find(quadric_class(1, 1)) == f.slices.end());

    CHECK_THROWS_AS(flex_quadric(build_G(Target::Plane, 2),
                                 build_enriched(build_G(Target::Plane, 2))),
                    std::invalid_argument);
}
