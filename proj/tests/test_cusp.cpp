/**
 * @file test_cusp.cpp
 * @brief Cusp-potential tests: the classical counts of cuspidal plane
 *        cubics/quartics, the incidence-only consistency identity, the
 *        branched-cover and ruling-cover potentials, the closed form for
 *        quadric incidence-only cusp numbers, and the irreducibility
 *        corrections with a frozen hand-expanded correction slice.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "charnum/cusp.hpp"
#include "charnum/incidence.hpp"
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

/// Keep only the incidence-only cells (b = c = 0) of every class slice.
Potential restrict_incidence(const Potential& p) {
    Potential r = make_zero(p.target, p.cap);
    for (const auto& [cls, cells] : p.slices)
        for (const auto& [e, value] : cells)
            if (e.b == 0 && e.c == 0) set_cell(r, cls, e, value);
    return r;
}

}  // namespace

TEST_CASE("plane cusp counts: cubics and quartics") {
    Potential g = build_G(Target::Plane, 4);
    CuspSet cusp = cusp_plane(g, build_enriched(g));
    CHECK(cusp.k.kind == Kind::K);
    CHECK(cusp.kl.kind == Kind::KL);
    CHECK(cusp.kp.kind == Kind::KP);

    // 24 cuspidal rational cubics through 7 points; 2304 cuspidal quartics
    // through 10 points (hand-run incidence-only recursion).
    CHECK(coefficient(cusp.k, plane_class(3), ExponentTuple{7, 0, 0}) == 24);
    CHECK(coefficient(cusp.k, plane_class(4), ExponentTuple{10, 0, 0}) == 2304);

    // No cuspidal lines, and no honest cuspidal conics.
    CHECK(cusp.k.slices.find(plane_class(1)) == cusp.k.slices.end());
    CHECK(cusp.kl.slices.find(plane_class(1)) == cusp.kl.slices.end());
    CHECK(cusp.kp.slices.find(plane_class(1)) == cusp.kp.slices.end());
    CHECK(coefficient(cusp.k, plane_class(2), ExponentTuple{4, 0, 0}) == 0);

    // The degree-2 slices that do appear are stack counts of marked double
    // covers of a line; hand-expanded from the defining polynomials.
    std::map<ExponentTuple, Rational> kp_conic{
        {{0, 0, 1}, rat(1, 2)}, {{1, 1, 0}, 1}, {{0, 2, 0}, rat(1, 2)},
    };
    CHECK(n_slice(cusp.kp, plane_class(2)) == kp_conic);

    for (const Potential* p : {&cusp.k, &cusp.kl, &cusp.kp})
        CHECK_NOTHROW(assert_on_stratum(*p));
}

TEST_CASE("plane cusp potential satisfies the incidence-only identity") {
    // K_s = 3(G_us - G_u + 1/2 G_ss^2) - d/ds (G_s^2) modulo (v, w): an
    // independent closed consequence of the defining equations.
    Potential g = build_G(Target::Plane, 5);
    CuspSet cusp = cusp_plane(g, build_enriched(g));

    Potential gs = deriv_exp(g, Var::S);
    Potential gss = deriv_exp(gs, Var::S);
    Potential gu = deriv_poly(g, Var::U);
    Potential gus = deriv_exp(gu, Var::S);

    Potential lhs = deriv_exp(cusp.k, Var::S);
    Potential rhs = scale(gus - gu + scale(gss * gss, rat(1, 2)), 3) -
                    deriv_exp(gs * gs, Var::S);
    CHECK(same_series(restrict_incidence(lhs), restrict_incidence(rhs)));
}

TEST_CASE("branched-cover potential H and the ruling covers I, J") {
    Potential h = build_H(4);
    CHECK(h.kind == Kind::H);
    CHECK_NOTHROW(assert_on_stratum(h));

    // Degree-d covers of a line sit at b = 2d-2 simple branch points, on
    // classes (d, 0) only; the counts are stack counts: 1, 1/2, 4, 120.
    CHECK(coefficient(h, quadric_class(1, 0), ExponentTuple{0, 0, 0}) == 1);
    CHECK(coefficient(h, quadric_class(2, 0), ExponentTuple{0, 2, 0}) == rat(1, 2));
    CHECK(coefficient(h, quadric_class(3, 0), ExponentTuple{0, 4, 0}) == 4);
    CHECK(coefficient(h, quadric_class(4, 0), ExponentTuple{0, 6, 0}) == 120);
    for (const auto& [cls, cells] : h.slices) {
        CHECK(cls.n == 0);
        CHECK(cells.size() == 1);
        CHECK(cells.begin()->first == ExponentTuple{0, 2 * cls.m - 2, 0});
    }

    auto [i, j] = build_rule_covers(h);
    CHECK(i.kind == Kind::I);
    CHECK(j.kind == Kind::J);
    CHECK_NOTHROW(assert_on_stratum(i));
    CHECK(same_series(j, swap_series(i)));

    // One line in the ruling through a point.
    std::map<ExponentTuple, Rational> line{{{1, 0, 0}, 1}};
    CHECK(n_slice(i, quadric_class(1, 0)) == line);

    // Double covers of a ruling line agree with the corresponding G slice:
    // every stable map of class (2,0) is such a cover.
    Potential g = build_G(Target::Quadric, 2);
    CHECK(i.slices.at(quadric_class(2, 0)) == g.slices.at(quadric_class(2, 0)));

    // I never mixes u and w, and lives on one-ruling classes only.
    CHECK(is_zero(deriv_poly(deriv_poly(i, Var::W), Var::U)));
    for (const auto& [cls, cells] : i.slices) CHECK(cls.n == 0);
}

TEST_CASE("quadric cusp counts agree with the closed form") {
    Potential g = build_G(Target::Quadric, 4);
    CuspSet cusp = cusp_quadric(g, build_enriched(g));
    auto incidence = incidence_quadric(4);

    // Hand-checked values of the closed form.
    CHECK(kinc_closed_form(incidence, quadric_class(1, 1)) == 0);
    CHECK(kinc_closed_form(incidence, quadric_class(2, 1)) == 0);
    CHECK(kinc_closed_form(incidence, quadric_class(2, 2)) == 24);
    CHECK(coefficient(cusp.k, quadric_class(2, 2), ExponentTuple{6, 0, 0}) == 24);

    // Cellwise agreement of the v = w = 0 slice of K with the closed form on
    // every class inside the cap.
    for (const auto& [cls, value] : incidence) {
        (void)value;
        int a = 2 * cls.total() - 2;
        CHECK(coefficient(cusp.k, cls, ExponentTuple{a, 0, 0}) ==
              kinc_closed_form(incidence, cls));
    }
}

TEST_CASE("irreducibility corrections on the quadric") {
    Potential g = build_G(Target::Quadric, 4);
    CuspSet cusp = cusp_quadric(g, build_enriched(g));
    Potential h = build_H(4);
    auto [i, j] = build_rule_covers(h);
    IrreducibleCuspSet irr = irreducible_corrections(cusp, i, j, g);

    // Every incidence-only cuspidal curve is irreducible: K needs no
    // correction.
    CHECK(same_series(irr.k_irr, cusp.k));

    // Corrected potentials stay on their strata and remain swap-symmetric.
    CHECK_NOTHROW(assert_on_stratum(irr.kp_irr));
    CHECK_NOTHROW(assert_on_stratum(irr.kl_irr));
    CHECK(same_series(swap_series(irr.kp_irr), irr.kp_irr));
    CHECK(same_series(swap_series(irr.kl_irr), irr.kl_irr));

    // The correction is a sum of products over class splittings, so it
    // cannot touch total degree 1.
    Potential kp_corr = cusp.kp - irr.kp_irr;
    Potential kl_corr = cusp.kl - irr.kl_irr;
    for (const auto& [cls, cells] : kp_corr.slices) CHECK(cls.total() >= 2);
    for (const auto& [cls, cells] : kl_corr.slices) CHECK(cls.total() >= 2);

    // Frozen hand expansion: at class (3,0) the KP correction is exactly the
    // ruling-cover term I_wu1 L1 G, with ordinary value 2 on v^2.
    std::map<ExponentTuple, Rational> corr30{{{0, 2, 0}, 4}};  // 2 * 2! as a count
    CHECK(n_slice(kp_corr, quadric_class(3, 0)) == corr30);
}
