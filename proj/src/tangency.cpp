/// @file tangency.cpp
/// @brief Degree-by-degree solver for the characteristic-number potential.

#include "charnum/tangency.hpp"

#include <stdexcept>
#include <vector>

#include "charnum/incidence.hpp"
#include "charnum/targets.hpp"

namespace charnum {

namespace {

/// Quadratic part of the v-relation (the terms built from products of two
/// strictly smaller classes).
Potential v_quadratic(const Potential& G) {
    Potential Gs = deriv_exp(G, Var::S);
    if (G.target == Target::Plane) {
        Potential Gss = deriv_exp(Gs, Var::S);
        Potential Gus = deriv_exp(deriv_poly(G, Var::U), Var::S);
        return scale(Gss * operator_apply(op_L(G.target), Gs) +
                         Gus * operator_apply(op_P(G.target), Gs),
                     rat(1, 2));
    }
    Potential Gsu1 = deriv_exp(Gs, Var::U1);
    Potential Gsu2 = deriv_exp(Gs, Var::U2);
    Potential Gus = deriv_exp(deriv_poly(G, Var::U), Var::S);
    return scale(Gsu1 * operator_apply(op_L1(), Gs) + Gsu2 * operator_apply(op_L2(), Gs) +
                     Gus * operator_apply(op_P(G.target), Gs),
                 rat(1, 2));
}

/// Quadratic part of the w-relation.
Potential w_quadratic(const Potential& G) {
    Potential Gss = deriv_exp(deriv_exp(G, Var::S), Var::S);
    Potential Gu = deriv_poly(G, Var::U);
    if (G.target == Target::Plane) {
        Potential Gus = deriv_exp(Gu, Var::S);
        Potential Guu = deriv_poly(Gu, Var::U);
        return Gus * operator_apply(op_L(G.target), Gss) +
               Guu * operator_apply(op_P(G.target), Gss);
    }
    Potential Guu1 = deriv_exp(Gu, Var::U1);
    Potential Guu2 = deriv_exp(Gu, Var::U2);
    Potential Guu = deriv_poly(Gu, Var::U);
    return Guu1 * operator_apply(op_L1(), Gss) + Guu2 * operator_apply(op_L2(), Gss) +
           Guu * operator_apply(op_P(G.target), Gss);
}

/// Classes of one total degree, in map order.
std::vector<CurveClass> classes_of_degree(Target target, int t) {
    if (target == Target::Plane) return {plane_class(t)};
    std::vector<CurveClass> out;
    for (int m = 0; m <= t; ++m) out.push_back(quadric_class(m, t - m));
    return out;
}

}  // namespace

Potential build_G(Target target, int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    Potential G = make_zero(target, cap);

    // Incidence seeds: the whole v = w = 0 layer.
    if (target == Target::Plane) {
        for (const auto& [d, nd] : incidence_plane(cap)) {
            int stratum = 3 * d - 1;
            set_cell(G, plane_class(d), ExponentTuple{stratum, 0, 0},
                     Rational(nd) / Rational(factorial(stratum)));
        }
    } else {
        for (const auto& [cls, nmn] : incidence_quadric(cap)) {
            int stratum = 2 * cls.total() - 1;
            set_cell(G, cls, ExponentTuple{stratum, 0, 0},
                     Rational(nmn) / Rational(factorial(stratum)));
        }
    }

    // The same-class linear coefficients of the two relations:
    //   v-relation, cell (a,b,c):  t(b+1) g(a,b+1,c) = lin_v (a+1) g(a+1,b,c) + quad
    //   w-relation, cell (a,b,c):  t^2(c+1) g(a,b,c+1) = lin_w (a+2)(a+1) g(a+2,b,c) + quad
    // with lin_v = t-1, lin_w = 1 on the plane and lin_v = 2t-2, lin_w = 2 on
    // the quadric.
    for (int t = 1; t <= cap; ++t) {
        Potential vq = v_quadratic(G);
        Potential wq = w_quadratic(G);
        long lin_v = target == Target::Plane ? t - 1 : 2 * t - 2;
        long lin_w = target == Target::Plane ? 1 : 2;
        for (CurveClass cls : classes_of_degree(target, t)) {
            int stratum = target == Target::Plane ? 3 * t - 1 : 2 * t - 1;
            // c-induction along b = 0.
            for (int c = 0; stratum - 2 * (c + 1) >= 0; ++c) {
                int a = stratum - 2 * (c + 1);
                Rational rhs = rat(lin_w) * rat(a + 2) * rat(a + 1) *
                                   ordinary_at(G, cls, ExponentTuple{a + 2, 0, c}) +
                               ordinary_at(wq, cls, ExponentTuple{a, 0, c});
                set_cell(G, cls, ExponentTuple{a, 0, c + 1},
                         rhs / (rat(t) * rat(t) * rat(c + 1)));
            }
            // b-induction at every c level.
            for (int c = 0; stratum - 2 * c >= 0; ++c) {
                for (int b = 0; stratum - (b + 1) - 2 * c >= 0; ++b) {
                    int a = stratum - (b + 1) - 2 * c;
                    Rational rhs = rat(lin_v) * rat(a + 1) *
                                       ordinary_at(G, cls, ExponentTuple{a + 1, b, c}) +
                                   ordinary_at(vq, cls, ExponentTuple{a, b, c});
                    set_cell(G, cls, ExponentTuple{a, b + 1, c},
                             rhs / (rat(t) * rat(b + 1)));
                }
            }
        }
    }
    return published(std::move(G), Kind::G);
}

Potential trr_residual_v(const Potential& G) {
    Potential Gvs = deriv_exp(deriv_poly(G, Var::V), Var::S);
    Potential Gu = deriv_poly(G, Var::U);
    Potential Gus = deriv_exp(Gu, Var::S);
    Rational lin = G.target == Target::Plane ? rat(1) : rat(2);
    return Gvs - scale(Gus - Gu, lin) - v_quadratic(G);
}

Potential trr_residual_w(const Potential& G) {
    Potential Gwss = deriv_exp(deriv_exp(deriv_poly(G, Var::W), Var::S), Var::S);
    Potential Guu = deriv_poly(deriv_poly(G, Var::U), Var::U);
    Rational lin = G.target == Target::Plane ? rat(1) : rat(2);
    return Gwss - scale(Guu, lin) - w_quadratic(G);
}

Potential trr_residual(const Potential& G) {
    // The v-residual lives one stratum below G, the w-residual two below;
    // the supports are disjoint, so the sum vanishes iff both do.
    return trr_residual_v(G) + trr_residual_w(G);
}

}  // namespace charnum
