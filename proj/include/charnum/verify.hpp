/**
 * @file verify.hpp
 * @brief The internal-identity suite: every structural identity the theory
 *        imposes on the computed potentials, checked exactly.
 *
 * Hard checks are identities that must hold (a failure is a bug); soft
 * checks are empirical expectations (integrality of corrected quadric cusp
 * numbers, sign patterns) that are reported but do not fail the suite.
 */
#pragma once

#include <string>
#include <vector>

#include "charnum/cusp.hpp"
#include "charnum/enriched.hpp"
#include "charnum/flex.hpp"
#include "charnum/potential.hpp"

namespace charnum {

/// Everything the engine can build for one target at one cap.
struct PotentialBundle {
    Target target;
    int cap = 0;
    Potential G;
    EnrichedSet enriched;
    CuspSet cusp;
    // Quadric-only members (left empty on the plane):
    Potential H, I, J;
    IrreducibleCuspSet irr;
    Potential F;             ///< quadric triple-contact potential
    // Plane-only members (left empty on the quadric):
    Potential F1, F2, F3;    ///< triple-contact potentials for z = 1, 2, 3
};

/// Build the full bundle in dependency order.
PotentialBundle build_bundle(Target target, int cap);

struct CheckResult {
    std::string name;
    bool passed = false;
    bool hard = true;
    std::string detail;
};

/// Run every applicable check on a bundle.
std::vector<CheckResult> run_verify(const PotentialBundle& bundle);

/// Convenience: build, then check.
std::vector<CheckResult> run_verify(Target target, int cap);

/// True when no hard check failed.
bool all_hard_passed(const std::vector<CheckResult>& results);

}  // namespace charnum
