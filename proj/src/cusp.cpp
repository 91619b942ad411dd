/// @file cusp.cpp
/// @brief Cusp potentials, branched covers, and irreducibility corrections.

#include "charnum/cusp.hpp"

#include <stdexcept>

#include "charnum/targets.hpp"

namespace charnum {

Potential build_H(int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    Potential H = make_zero(Target::Quadric, cap);
    // Ordinary coefficients h(d) at exponent (0, 2d-2, 0).  The recursion
    // H_vt = v·H_tt·H_tt reads, at degree d and v-exponent 2d-3:
    //   d(2d-2) h(d) = sum_{d'+d''=d} d'^2 d''^2 h(d') h(d'')
    // (the v-supports match up automatically: (2d'-2)+(2d''-2) = 2d-4).
    set_cell(H, quadric_class(1, 0), ExponentTuple{0, 0, 0}, 1);
    for (int d = 2; d <= cap; ++d) {
        Rational rhs = 0;
        for (int dp = 1; dp < d; ++dp) {
            int dq = d - dp;
            rhs += rat(dp) * rat(dp) * rat(dq) * rat(dq) *
                   ordinary_at(H, quadric_class(dp, 0), ExponentTuple{0, 2 * dp - 2, 0}) *
                   ordinary_at(H, quadric_class(dq, 0), ExponentTuple{0, 2 * dq - 2, 0});
        }
        set_cell(H, quadric_class(d, 0), ExponentTuple{0, 2 * d - 2, 0},
                 rhs / (rat(d) * rat(2 * d - 2)));
    }
    return published(std::move(H), Kind::H);
}

std::pair<Potential, Potential> build_rule_covers(const Potential& H) {
    if (H.kind != Kind::H)
        throw std::invalid_argument("build_rule_covers expects the branched-cover potential");
    Potential Hv = deriv_poly(H, Var::V);
    Potential I = mul_monomial(deriv_exp(H, Var::U1), ExponentTuple{1, 0, 0}, 1) +
                  mul_monomial(Hv, ExponentTuple{0, 2, 0}, 1) +
                  mul_monomial(Hv, ExponentTuple{0, 0, 1}, 1);
    Potential J = swap_series(I);
    return {published(std::move(I), Kind::I), published(std::move(J), Kind::J)};
}

namespace {

/// Shared derivative pack for the cusp formulas.
struct GDerivs {
    Potential v, s, u, us, ss, uss, vu, vs, ws, wu, wss;
};

GDerivs derivs(const Potential& G) {
    GDerivs d;
    d.v = deriv_poly(G, Var::V);
    d.s = deriv_exp(G, Var::S);
    d.u = deriv_poly(G, Var::U);
    d.us = deriv_exp(d.u, Var::S);
    d.ss = deriv_exp(d.s, Var::S);
    d.uss = deriv_exp(d.us, Var::S);
    d.vu = deriv_poly(d.v, Var::U);
    d.vs = deriv_exp(d.v, Var::S);
    Potential gw = deriv_poly(G, Var::W);
    d.ws = deriv_exp(gw, Var::S);
    d.wu = deriv_poly(gw, Var::U);
    d.wss = deriv_exp(d.ws, Var::S);
    return d;
}

void require_enriched_match(const Potential& G, const EnrichedSet& enriched) {
    if (enriched.target != G.target || enriched.cap != G.cap)
        throw std::invalid_argument("enriched set does not match G (target or cap)");
}

}  // namespace

CuspSet cusp_plane(const Potential& G, const EnrichedSet& enriched) {
    if (G.target != Target::Plane)
        throw std::invalid_argument("cusp_plane expects a plane potential");
    require_enriched_match(G, enriched);
    GDerivs d = derivs(G);
    const DiffOperator& L = op_L(G.target);
    const DiffOperator& P = op_P(G.target);

    Potential kp_ss = d.wu - d.us * d.us + d.ws * operator_apply(L, d.ss) +
                      d.wu * operator_apply(P, d.ss);
    // The -v·KP_ss term takes the raw double derivative; integration happens
    // once per potential, at the end.
    Potential kl_ss = d.vu + scale(d.wss, 2) - mul_monomial(kp_ss, ExponentTuple{0, 1, 0}, 1) -
                      scale(d.ws, 2) - d.us * d.ss - d.us * operator_apply(L, d.s) +
                      d.vs * operator_apply(L, d.ss) + d.vu * operator_apply(P, d.ss);

    Potential kp = integrate_exp(kp_ss, Var::S, 2);
    Potential kl = integrate_exp(kl_ss, Var::S, 2);
    Potential k = scale(d.v, 3) - mul_monomial(kl, ExponentTuple{0, 1, 0}, 1) -
                  mul_monomial(kp, ExponentTuple{0, 2, 0}, rat(1, 2)) -
                  mul_monomial(kp, ExponentTuple{0, 0, 1}, 1) + scale(enriched.q0, 2);

    return CuspSet{published(std::move(kp), Kind::KP), published(std::move(kl), Kind::KL),
                   published(std::move(k), Kind::K)};
}

CuspSet cusp_quadric(const Potential& G, const EnrichedSet& enriched) {
    if (G.target != Target::Quadric)
        throw std::invalid_argument("cusp_quadric expects a quadric potential");
    require_enriched_match(G, enriched);
    GDerivs d = derivs(G);
    const DiffOperator& L = op_L(G.target);
    const DiffOperator& P = op_P(G.target);
    // Subscript u1/u2 on a first derivative means the ruling pairing (the two
    // halves of the s-pairing), not a second polynomial derivative.
    Potential gw = deriv_poly(G, Var::W);
    Potential wu1 = deriv_exp(gw, Var::U1);
    Potential wu2 = deriv_exp(gw, Var::U2);
    Potential vu1 = deriv_exp(d.v, Var::U1);
    Potential vu2 = deriv_exp(d.v, Var::U2);

    Potential kp_ss = scale(d.wu, 2) - d.us * d.us + wu1 * operator_apply(op_L1(), d.ss) +
                      wu2 * operator_apply(op_L2(), d.ss) + d.wu * operator_apply(P, d.ss);
    Potential kl_ss = scale(d.vu, 2) - scale(d.ws, 4) -
                      mul_monomial(kp_ss, ExponentTuple{0, 1, 0}, 2) + scale(d.wss, 2) -
                      d.us * d.ss - d.us * operator_apply(L, d.s) +
                      vu1 * operator_apply(op_L1(), d.ss) + vu2 * operator_apply(op_L2(), d.ss) +
                      d.vu * operator_apply(P, d.ss);

    Potential kp = integrate_exp(kp_ss, Var::S, 2);
    Potential kl = integrate_exp(kl_ss, Var::S, 2);
    Potential k = scale(d.v, 2) - mul_monomial(kl, ExponentTuple{0, 1, 0}, 1) -
                  mul_monomial(kp, ExponentTuple{0, 2, 0}, 1) -
                  mul_monomial(kp, ExponentTuple{0, 0, 1}, 1) + scale(enriched.q0, 2);

    return CuspSet{published(std::move(kp), Kind::KP), published(std::move(kl), Kind::KL),
                   published(std::move(k), Kind::K)};
}

IrreducibleCuspSet irreducible_corrections(const CuspSet& cusp, const Potential& I,
                                           const Potential& J, const Potential& G) {
    if (G.target != Target::Quadric)
        throw std::invalid_argument("irreducible corrections exist on the quadric only");
    if (I.cap != G.cap || J.cap != G.cap || cusp.k.cap != G.cap)
        throw std::invalid_argument("irreducible_corrections: cap mismatch");

    Potential Iv = deriv_poly(I, Var::V);
    Potential Jv = deriv_poly(J, Var::V);
    Potential Iw = deriv_poly(I, Var::W);
    Potential Jw = deriv_poly(J, Var::W);

    Potential kl_corr = deriv_exp(Iv, Var::U1) * operator_apply(op_L1(), G) +
                        deriv_exp(Jv, Var::U2) * operator_apply(op_L2(), G) +
                        (deriv_poly(Iv, Var::U) + deriv_poly(Jv, Var::U)) *
                            operator_apply(op_P(G.target), G);
    Potential kp_corr = deriv_exp(Iw, Var::U1) * operator_apply(op_L1(), G) +
                        deriv_exp(Jw, Var::U2) * operator_apply(op_L2(), G);

    return IrreducibleCuspSet{published(cusp.kp - kp_corr, Kind::KPirr),
                              published(cusp.kl - kl_corr, Kind::KLirr),
                              published(cusp.k, Kind::K)};
}

Rational kinc_closed_form(const std::map<CurveClass, Integer>& incidence, CurveClass cls) {
    if (cls.target != Target::Quadric)
        throw std::invalid_argument("closed form applies to quadric classes");
    int d = cls.total();
    if (d < 1) throw std::invalid_argument("class total degree must be >= 1");
    auto number = [&incidence](int m, int n) -> Integer {
        auto it = incidence.find(quadric_class(m, n));
        if (it == incidence.end())
            throw std::invalid_argument("incidence table is missing class " +
                                        class_name(quadric_class(m, n)));
        return it->second;
    };
    Rational total = rat(4 * (d - 1), d) * Rational(number(cls.m, cls.n));
    for (int mp = 0; mp <= cls.m; ++mp) {
        for (int np = 0; np <= cls.n; ++np) {
            int mq = cls.m - mp, nq = cls.n - np;
            if (mp + np == 0 || mq + nq == 0) continue;
            int dp = mp + np, dq = mq + nq;
            Integer pair = number(mp, np) * number(mq, nq);
            if (pair == 0) continue;
            total += Rational(binomial(2 * d - 2, 2 * dp - 1)) *
                     rat(1L * mp * nq + 1L * np * mq) * rat(1L * dp * dq - d, d) *
                     Rational(pair);
        }
    }
    return total;
}

}  // namespace charnum
