/// @file flex.cpp
/// @brief Triple-contact potential builders.

#include "charnum/flex.hpp"

#include <stdexcept>

#include "charnum/targets.hpp"

namespace charnum {

namespace {

void require_enriched_match(const Potential& G, const EnrichedSet& enriched) {
    if (enriched.target != G.target || enriched.cap != G.cap)
        throw std::invalid_argument("enriched set does not match G (target or cap)");
}

}  // namespace

Potential flex_plane(const Potential& G, const EnrichedSet& enriched, int z) {
    if (G.target != Target::Plane)
        throw std::invalid_argument("flex_plane expects a plane potential");
    if (z < 1) throw std::invalid_argument("the fixed curve degree z must be >= 1");
    require_enriched_match(G, enriched);

    Potential Gs = deriv_exp(G, Var::S);
    Potential Gu = deriv_poly(G, Var::U);
    Potential Gus = deriv_exp(Gu, Var::S);
    Potential Gss = deriv_exp(Gs, Var::S);
    Potential Guss = deriv_exp(Gus, Var::S);
    Potential Gv = deriv_poly(G, Var::V);
    Potential Gvu = deriv_poly(Gv, Var::U);
    Potential Gvs = deriv_exp(Gv, Var::S);
    Potential Gw = deriv_poly(G, Var::W);
    Potential Gws = deriv_exp(Gw, Var::S);
    Potential Gwss = deriv_exp(Gws, Var::S);
    const DiffOperator& L = op_L(G.target);
    const DiffOperator& P = op_P(G.target);

    // F^z_ss = z( (3z-2)G_wss + 2G_vu - 4G_ws + G_s G_uss + G_u L G_ss
    //             - G_us G_ss - G_us L G_s + 2(G_vs L G_ss + G_vu P G_ss) )
    Potential f_ss = scale(
        scale(Gwss, rat(3L * z - 2)) + scale(Gvu, 2) - scale(Gws, 4) + Gs * Guss +
            Gu * operator_apply(L, Gss) - Gus * Gss - Gus * operator_apply(L, Gs) +
            scale(Gvs * operator_apply(L, Gss) + Gvu * operator_apply(P, Gss), 2),
        rat(z));
    Potential f = integrate_exp(f_ss, Var::S, 2);

    // Cross-check against the assembly 3z^2 G_w + 2z ∫∫Q1_ss - z ∫∫P1_ss,
    // which must agree cellwise (including the degree-1 slice).
    Potential assembled = scale(Gw, rat(3L * z * z)) +
                          scale(integrate_exp(enriched.q1, Var::S, 2), rat(2L * z)) -
                          scale(integrate_exp(enriched.p1, Var::S, 2), rat(z));
    if (!same_series(f, assembled))
        throw std::logic_error("triple-contact assembly mismatch on the plane (z = " +
                               std::to_string(z) + ")");

    // Drop the degree-1 slice: the contact hypothesis fails for lines, so the
    // value has no enumerative meaning and is not published.
    f.slices.erase(plane_class(1));
    return published(std::move(f), Kind::F);
}

Potential flex_quadric(const Potential& G, const EnrichedSet& enriched) {
    if (G.target != Target::Quadric)
        throw std::invalid_argument("flex_quadric expects a quadric potential");
    require_enriched_match(G, enriched);

    Potential Gs = deriv_exp(G, Var::S);
    Potential Gu = deriv_poly(G, Var::U);
    Potential Gus = deriv_exp(Gu, Var::S);
    Potential Gss = deriv_exp(Gs, Var::S);
    Potential Guss = deriv_exp(Gus, Var::S);
    Potential Gv = deriv_poly(G, Var::V);
    Potential Gvu = deriv_poly(Gv, Var::U);
    // Subscript u1/u2 on a first derivative means the ruling pairing (the two
    // halves of the s-pairing), not a second polynomial derivative.
    Potential Gvu1 = deriv_exp(Gv, Var::U1);
    Potential Gvu2 = deriv_exp(Gv, Var::U2);
    Potential Gw = deriv_poly(G, Var::W);
    Potential Gws = deriv_exp(Gw, Var::S);
    Potential Gwss = deriv_exp(Gws, Var::S);
    const DiffOperator& L = op_L(G.target);
    const DiffOperator& P = op_P(G.target);

    // F_ss = 2G_wss + 4G_vu - 8G_ws + G_s G_uss + G_u L G_ss - G_us G_ss
    //        - G_us L G_s + 2(G_vu1 L1 G_ss + G_vu2 L2 G_ss + G_vu P G_ss)
    Potential f_ss = scale(Gwss, 2) + scale(Gvu, 4) - scale(Gws, 8) + Gs * Guss +
                     Gu * operator_apply(L, Gss) - Gus * Gss - Gus * operator_apply(L, Gs) +
                     scale(Gvu1 * operator_apply(op_L1(), Gss) +
                               Gvu2 * operator_apply(op_L2(), Gss) +
                               Gvu * operator_apply(P, Gss),
                           2);
    Potential f = integrate_exp(f_ss, Var::S, 2);

    // Cross-check against F = 6G_w + 2 ∫∫Q12_ss - ∫∫P12_ss.
    Potential assembled = scale(Gw, 6) + scale(integrate_exp(enriched.q1, Var::S, 2), 2) -
                          integrate_exp(enriched.p1, Var::S, 2);
    if (!same_series(f, assembled))
        throw std::logic_error("triple-contact assembly mismatch on the quadric");

    return published(std::move(f), Kind::F);
}

}  // namespace charnum
