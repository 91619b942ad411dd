/**
 * @file cusp.hpp
 * @brief Cuspidal-curve potentials for both targets, the auxiliary
 *        branched-cover and ruling-cover potentials on the quadric, the
 *        irreducibility corrections, and an independent closed form for the
 *        quadric incidence-only cusp numbers.
 *
 * K counts rational curves with a cusp somewhere; KL asks the cusp to lie on
 * a general divisor of the reference family; KP pins the cusp to a general
 * point.  The engine first builds the double s-derivatives KP_ss and KL_ss
 * from G, integrates twice, and assembles K.
 *
 * On the quadric, configurations containing a multiple cover of a ruling
 * satisfy tangency conditions without honest geometric tangency; I and J
 * collect those covers (from the branched-cover potential H) and KLirr/KPirr
 * subtract their contribution.  K needs no correction.
 */
#pragma once

#include <map>

#include "charnum/enriched.hpp"
#include "charnum/potential.hpp"

namespace charnum {

struct CuspSet {
    Potential kp;  ///< cusp at a general point
    Potential kl;  ///< cusp on a general divisor of the reference family
    Potential k;   ///< cusp anywhere
};

/// Simple genus-zero branched covers of a line: embedded on quadric classes
/// (d,0) with only the v-exponent used; the count at degree d sits at
/// b = 2d-2 (number of simple branch points).  Solved from
/// H_vt = v·H_tt·H_tt with H_1(0) = 1.
Potential build_H(int cap);

/// Ruling-cover potentials: I = u·H_u1 + (v^2+w)·H_v on classes (i,0), and J
/// its mirror image on classes (0,i).
std::pair<Potential, Potential> build_rule_covers(const Potential& H);

/// Plane cusp potentials:
///   KP_ss = G_wu - G_us G_us + (G_ws L G_ss + G_wu P G_ss)
///   KL_ss = G_vu + 2G_wss - v·KP_ss - 2G_ws - G_us G_ss - G_us L G_s
///           + (G_vs L G_ss + G_vu P G_ss)
///   K     = 3G_v - v·KL - (v^2/2 + w)·KP + 2·Q0
/// where the -v·KP_ss term consumes the raw double derivative and the
/// closing formula the twice-integrated potentials.
CuspSet cusp_plane(const Potential& G, const EnrichedSet& enriched);

/// Quadric cusp potentials:
///   KP_ss = 2G_wu - G_us G_us + (G_wu1 L1 G_ss + G_wu2 L2 G_ss + G_wu P G_ss)
///   KL_ss = 2G_vu - 4G_ws - 2v·KP_ss + 2G_wss - G_us G_ss - G_us L G_s
///           + (G_vu1 L1 G_ss + G_vu2 L2 G_ss + G_vu P G_ss)
///   K     = 2G_v - v·KL - (v^2 + w)·KP + 2·Q0
CuspSet cusp_quadric(const Potential& G, const EnrichedSet& enriched);

struct IrreducibleCuspSet {
    Potential kp_irr;
    Potential kl_irr;
    Potential k_irr;  ///< equal to K: every solution curve is irreducible
};

/// Remove the multiple-rule-cover contributions:
///   KLirr = KL - (I_vu1 L1 G + J_vu2 L2 G + (I_vu + J_vu) P G)
///   KPirr = KP - (I_wu1 L1 G + J_wu2 L2 G)
///   Kirr  = K
IrreducibleCuspSet irreducible_corrections(const CuspSet& cusp, const Potential& I,
                                           const Potential& J, const Potential& G);

/// Independent closed form for the incidence-only cusp numbers on the
/// quadric (d = m+n, primed letters ranging over ordered splittings into two
/// nonzero classes):
///   C = 4(d-1)/d · N + sum C(2d-2, 2d'-1) (m'n'' + n'm'')(d'd'' - d)/d · N' N''.
Rational kinc_closed_form(const std::map<CurveClass, Integer>& incidence, CurveClass cls);

}  // namespace charnum
