/**
 * @file tangency.hpp
 * @brief Construction of the characteristic-number potential G.
 *
 * G collects, per curve class, the counts N(a,b,c) of rational curves through
 * a general points, tangent to b general divisors of the reference family
 * (lines on the plane; (1,1)-curves on the quadric), and tangent to c such
 * divisors at a marked general point of the divisor.  The v=w=0 layer is the
 * incidence data; the b and c directions are filled in by solving the two
 * first-order recursion relations
 *
 *   plane:   G_vs  = G_us - G_u  + 1/2 (G_ss  L G_s  + G_us P G_s )
 *            G_wss = G_uu        +     (G_us  L G_ss + G_uu P G_ss)
 *   quadric: G_vs  = 2G_us - 2G_u + 1/2 (G_su1 L1 G_s  + G_su2 L2 G_s  + G_us P G_s )
 *            G_wss = 2G_uu        +     (G_uu1 L1 G_ss + G_uu2 L2 G_ss + G_uu P G_ss)
 *
 * coefficient by coefficient: all quadratic terms only involve strictly
 * smaller classes, the linear terms on the right only smaller b resp. c.
 */
#pragma once

#include "charnum/potential.hpp"

namespace charnum {

/// Build G up to the cap (maximum total class degree).  Result is published
/// with kind G and sits exactly on the stratum a+b+2c = 3d-1 resp. 2(m+n)-1.
Potential build_G(Target target, int cap);

/// LHS - RHS of BOTH recursion relations, evaluated on every cell of G (not
/// only those the solver visited).  The two residuals live on disjoint
/// strata, so their sum is zero iff both vanish identically.
Potential trr_residual(const Potential& G);

/// Individual residuals, for diagnostics.
Potential trr_residual_v(const Potential& G);
Potential trr_residual_w(const Potential& G);

}  // namespace charnum
