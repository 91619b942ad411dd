/// @file enriched.cpp
/// @brief Differential-polynomial expressions for the enriched series.

#include "charnum/enriched.hpp"

#include <stdexcept>

#include "charnum/targets.hpp"

namespace charnum {

namespace {

/// Derivatives of G shared by the formulas below.
struct GDerivs {
    Potential s, u, us, ss, uss, vu, vs, ws, wu, wss;
};

GDerivs derivs(const Potential& G) {
    GDerivs d;
    d.s = deriv_exp(G, Var::S);
    d.u = deriv_poly(G, Var::U);
    d.us = deriv_exp(d.u, Var::S);
    d.ss = deriv_exp(d.s, Var::S);
    d.uss = deriv_exp(d.us, Var::S);
    Potential gv = deriv_poly(G, Var::V);
    d.vu = deriv_poly(gv, Var::U);
    d.vs = deriv_exp(gv, Var::S);
    Potential gw = deriv_poly(G, Var::W);
    d.ws = deriv_exp(gw, Var::S);
    d.wu = deriv_poly(gw, Var::U);
    d.wss = deriv_exp(d.ws, Var::S);
    return d;
}

/// P0 = 1/2 (G_s L G + G_u P G) on the plane; on the quadric the divisor
/// part splits over the two rulings: 1/2 (G_u1 L1 G + G_u2 L2 G + G_u P G).
Potential p0_series(const Potential& G) {
    Potential divisor_part;
    if (G.target == Target::Plane) {
        divisor_part = deriv_exp(G, Var::S) * operator_apply(op_L(G.target), G);
    } else {
        divisor_part = deriv_exp(G, Var::U1) * operator_apply(op_L1(), G) +
                       deriv_exp(G, Var::U2) * operator_apply(op_L2(), G);
    }
    Potential point_part = deriv_poly(G, Var::U) * operator_apply(op_P(G.target), G);
    return scale(divisor_part + point_part, rat(1, 2));
}

}  // namespace

Potential p_series(const Potential& G, Kind which) {
    if (!kind_valid_for(which, G.target))
        throw std::invalid_argument("kind " + kind_name(which) + " is not defined for target " +
                                    target_name(G.target));
    switch (which) {
        case Kind::P0:
            return published(p0_series(G), Kind::P0);
        case Kind::P1:
        case Kind::P12: {
            // P1_ss = G_us G_ss + G_uss G_s + G_u L G_ss + G_us L G_s
            GDerivs d = derivs(G);
            Potential r = d.us * d.ss + d.uss * d.s +
                          d.u * operator_apply(op_L(G.target), d.ss) +
                          d.us * operator_apply(op_L(G.target), d.s);
            return published(std::move(r), which);
        }
        case Kind::P2:
        case Kind::P3: {
            // P2_ss = G_us G_us + G_uss G_u
            GDerivs d = derivs(G);
            Potential r = d.us * d.us + d.uss * d.u;
            return published(std::move(r), which);
        }
        default:
            throw std::invalid_argument("p_series: not a P-series kind: " + kind_name(which));
    }
}

Potential q_series(const Potential& G, Kind which) {
    if (!kind_valid_for(which, G.target))
        throw std::invalid_argument("kind " + kind_name(which) + " is not defined for target " +
                                    target_name(G.target));
    switch (which) {
        case Kind::Q0:
            return published(scale(p0_series(G), -1), Kind::Q0);
        case Kind::Q1: {
            // Q1_ss = G_vu - 2G_ws - G_wss + G_s G_uss + G_u L G_ss
            //         + (G_vs L G_ss + G_vu P G_ss)
            GDerivs d = derivs(G);
            Potential r = d.vu - scale(d.ws, 2) - d.wss + d.s * d.uss +
                          d.u * operator_apply(op_L(G.target), d.ss) +
                          d.vs * operator_apply(op_L(G.target), d.ss) +
                          d.vu * operator_apply(op_P(G.target), d.ss);
            return published(std::move(r), which);
        }
        case Kind::Q12: {
            // Q12_ss = 2G_vu - 4G_ws - 2G_wss + G_s G_uss + G_u L G_ss
            //          + (G_vu1 L1 G_ss + G_vu2 L2 G_ss + G_vu P G_ss)
            GDerivs d = derivs(G);
            // Subscript u1/u2 on a first derivative means the ruling pairing
            // (the two halves of the s-pairing), not a second derivative.
            Potential gv = deriv_poly(G, Var::V);
            Potential vu1 = deriv_exp(gv, Var::U1);
            Potential vu2 = deriv_exp(gv, Var::U2);
            Potential r = scale(d.vu, 2) - scale(d.ws, 4) - scale(d.wss, 2) + d.s * d.uss +
                          d.u * operator_apply(op_L(G.target), d.ss) +
                          vu1 * operator_apply(op_L1(), d.ss) +
                          vu2 * operator_apply(op_L2(), d.ss) +
                          d.vu * operator_apply(op_P(G.target), d.ss);
            return published(std::move(r), which);
        }
        case Kind::Q2: {
            // Q2_ss = G_wu + G_u G_uss + (G_ws L G_ss + G_wu P G_ss)
            GDerivs d = derivs(G);
            Potential r = d.wu + d.u * d.uss +
                          d.ws * operator_apply(op_L(G.target), d.ss) +
                          d.wu * operator_apply(op_P(G.target), d.ss);
            return published(std::move(r), which);
        }
        case Kind::Q3: {
            // Q3_ss = 2G_wu + G_u G_uss + (G_wu1 L1 G_ss + G_wu2 L2 G_ss + G_wu P G_ss)
            GDerivs d = derivs(G);
            Potential gw = deriv_poly(G, Var::W);
            Potential wu1 = deriv_exp(gw, Var::U1);
            Potential wu2 = deriv_exp(gw, Var::U2);
            Potential r = scale(d.wu, 2) + d.u * d.uss +
                          wu1 * operator_apply(op_L1(), d.ss) +
                          wu2 * operator_apply(op_L2(), d.ss) +
                          d.wu * operator_apply(op_P(G.target), d.ss);
            return published(std::move(r), which);
        }
        default:
            throw std::invalid_argument("q_series: not a Q-series kind: " + kind_name(which));
    }
}

EnrichedSet build_enriched(const Potential& G) {
    EnrichedSet e{G.target, G.cap, {}, {}, {}, {}, {}, {}};
    bool plane = G.target == Target::Plane;
    e.p0 = p_series(G, Kind::P0);
    e.p1 = p_series(G, plane ? Kind::P1 : Kind::P12);
    e.p2 = p_series(G, plane ? Kind::P2 : Kind::P3);
    e.q0 = q_series(G, Kind::Q0);
    e.q1 = q_series(G, plane ? Kind::Q1 : Kind::Q12);
    e.q2 = q_series(G, plane ? Kind::Q2 : Kind::Q3);
    return e;
}

}  // namespace charnum
