/**
 * @file targets.hpp
 * @brief Target-space data: the first-order differential operators coming
 *        from the deformed intersection pairing, and the admissibility
 *        strata (expected condition totals) for every potential kind.
 *
 * Plane operators:
 *    L = d/ds + 2v d/du
 *    P = 2v d/ds + (2v^2 + 2w) d/du
 * Quadric operators:
 *    L1 = d/du2 + 2v d/du
 *    L2 = d/du1 + 2v d/du
 *    P  = 2v d/du1 + 2v d/du2 + (4v^2 + 2w) d/du
 *    L  = L1 + L2 = d/ds + 4v d/du
 *
 * A potential of a given kind can carry a nonzero coefficient at class of
 * total degree t only on the single stratum a + b + 2c = expected(kind, t);
 * an off-stratum nonzero cell is a bug, and publish() enforces that.
 */
#pragma once

#include <string>
#include <vector>

#include "charnum/potential.hpp"

namespace charnum {

/// One term of a first-order operator: weight · u^a v^b w^c · (basic
/// derivative).  The derivative acts first, then the monomial multiplies.
struct OpTerm {
    ExponentTuple shift;
    Rational weight;
    Var deriv;
};

struct DiffOperator {
    std::vector<OpTerm> terms;
};

/// Cohomology bookkeeping retained for documentation and tests.
struct TargetDescriptor {
    Target id;
    std::vector<std::string> basis;              ///< T_0 .. T_dim labels
    std::vector<std::vector<int>> pairing;       ///< Poincare pairing on the basis
    DiffOperator divisor_op;                     ///< L
    DiffOperator point_op;                       ///< P
    DiffOperator ruling1_op;                     ///< L1 (quadric only; empty on the plane)
    DiffOperator ruling2_op;                     ///< L2 (quadric only; empty on the plane)
};

const TargetDescriptor& descriptor(Target t);

/// Convenience accessors for the operator table.
const DiffOperator& op_L(Target t);   ///< divisor operator L
const DiffOperator& op_P(Target t);   ///< point operator P
const DiffOperator& op_L1();          ///< quadric L1
const DiffOperator& op_L2();          ///< quadric L2

/// Apply a first-order operator: sum over terms of
/// mul_monomial(derivative(p), shift, weight).
Potential operator_apply(const DiffOperator& op, const Potential& p);

/// The admissible condition total a+b+2c for a nonzero coefficient of the
/// given kind at the given class.  May be negative for small classes, in
/// which case the slice must be empty.  Throws for a kind/target mismatch.
int expected_conditions(Kind kind, CurveClass cls);

/// True when the kind is meaningful for the target.
bool kind_valid_for(Kind kind, Target target);

/// Verify that every stored cell of p lies on the stratum of `kind` (and for
/// H, that only the v-exponent is used); then tag p with the kind.  Throws
/// std::logic_error naming the first offending cell.
Potential published(Potential p, Kind kind);

/// Stratum check alone (used by the verify suite on parsed cache data).
void assert_on_stratum(const Potential& p);

/// Quadric involution on series: class (m,n) -> (n,m); exponent tuples are
/// untouched (u, v, w are symmetric under exchanging the rulings).
Potential swap_series(const Potential& p);

}  // namespace charnum
