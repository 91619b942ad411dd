/**
 * @file enriched.hpp
 * @brief The slightly enriched series: P-series (one incidence-variety class
 *        inserted at a mark) and Q-series (one squared modified cotangent
 *        class inserted at a mark), expressed as differential polynomials in
 *        the characteristic-number potential G.
 *
 * The superscript-0 members have closed forms; the higher members are
 * delivered — and stored — as double s-derivatives (suffix _ss in the kind
 * documentation).  P0 + Q0 = 0 identically, which the verify suite checks.
 */
#pragma once

#include "charnum/potential.hpp"

namespace charnum {

struct EnrichedSet {
    Target target;
    int cap;
    Potential p0;  ///< P0
    Potential p1;  ///< P1_ss (plane) or P12_ss (quadric)
    Potential p2;  ///< P2_ss (plane) or P3_ss (quadric)
    Potential q0;  ///< Q0
    Potential q1;  ///< Q1_ss (plane) or Q12_ss (quadric)
    Potential q2;  ///< Q2_ss (plane) or Q3_ss (quadric)
};

/// One P-series by kind (P0, P1, P2, P12, P3 as appropriate for G's target).
Potential p_series(const Potential& G, Kind which);

/// One Q-series by kind (Q0, Q1, Q2, Q12, Q3).
Potential q_series(const Potential& G, Kind which);

/// All six members for G's target.
EnrichedSet build_enriched(const Potential& G);

}  // namespace charnum
