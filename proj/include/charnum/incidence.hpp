/**
 * @file incidence.hpp
 * @brief Genus-zero incidence numbers (point conditions only) for both
 *        targets, obtained from the associativity relations of quantum
 *        cohomology.
 *
 * Plane: N_d counts rational degree-d curves through 3d-1 general points.
 * Quadric: N_(m,n) counts rational bi-degree-(m,n) curves through 2(m+n)-1
 * general points; classes that are multiples of one ruling have N = 0 beyond
 * the rulings themselves.
 */
#pragma once

#include <map>
#include <vector>

#include "charnum/rational.hpp"
#include "charnum/types.hpp"

namespace charnum {

/// N_1 .. N_cap by the degree-splitting recursion
///   N_d = sum_{d'+d''=d} N_{d'} N_{d''} d'^2 d''
///           ( d'' C(3d-4, 3d'-2) - d' C(3d-4, 3d'-1) ),  N_1 = 1.
std::vector<std::pair<int, Integer>> incidence_plane(int cap);

/// All N_(m,n) with 1 <= m+n <= cap, solved degree by degree from the
/// associativity relation paired against the two ruling classes, then
/// cross-checked against a second, independent associativity relation.
/// Throws std::logic_error if the two relations disagree.
std::map<CurveClass, Integer> incidence_quadric(int cap);

}  // namespace charnum
