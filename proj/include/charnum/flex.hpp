/**
 * @file flex.hpp
 * @brief Triple-contact potentials: curves having contact of order three
 *        with a fixed general curve V (degree z on the plane; bi-degree
 *        (1,1) on the quadric).
 *
 * The defining assembly is quadratic in z on the plane:
 *     F^z = 3z^2·G_w + 2z·Q1 - z·P1,
 * and the quadric analogue is F = 6·G_w + 2·Q12 - P12.  The builders work
 * from the expanded double-s-derivative form and integrate twice; the
 * assembly identity is re-checked cellwise on every call.
 *
 * Enumerative meaning requires the contact hypothesis: a general curve of
 * the class tangent to V touches it simply.  Plane degree 1 violates it
 * (a line tangent to V at an inflection point of V automatically has contact
 * of order three), so that slice is computed but not published.
 */
#pragma once

#include "charnum/enriched.hpp"
#include "charnum/potential.hpp"

namespace charnum {

struct FlexRequest {
    Target target;
    int z = 1;  ///< degree of the fixed curve; plane only, z >= 1
};

/// Plane triple-contact potential for contact with a degree-z curve.  The
/// degree-1 slice is omitted from the result (contact hypothesis fails).
Potential flex_plane(const Potential& G, const EnrichedSet& enriched, int z);

/// Quadric triple-contact potential (fixed (1,1)-curve).
Potential flex_quadric(const Potential& G, const EnrichedSet& enriched);

}  // namespace charnum
