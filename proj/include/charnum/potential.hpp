/**
 * @file potential.hpp
 * @brief Sparse truncated power series over one exponential grading (curve
 *        class) and three polynomial variables, with exact rational
 *        coefficients.
 *
 * A Potential stores ORDINARY power-series coefficients: the value kept at
 * (class, (a,b,c)) is the enumerative number divided by a!·b!·c!.  Ordinary
 * coefficients make the product a plain double convolution; the
 * divided-power convention of the underlying counts enters only through the
 * coefficient() accessor, which multiplies the factorials back in.
 *
 * Invariants maintained by every operation:
 *  - all stored classes share the potential's target and have total degree
 *    in [1, cap];
 *  - sparse normal form: no stored coefficient is zero, no class slice is
 *    empty;
 *  - results are independent of evaluation order (all containers ordered).
 */
#pragma once

#include <map>
#include <string>
#include <string_view>

#include "charnum/rational.hpp"
#include "charnum/types.hpp"

namespace charnum {

struct Potential {
    Target target = Target::Plane;
    Kind kind = Kind::Scratch;
    int cap = 0;
    std::map<CurveClass, std::map<ExponentTuple, Rational>> slices;
};

/// Empty potential with the given shape.
Potential make_zero(Target target, int cap, Kind kind = Kind::Scratch);

/// Insert or overwrite one cell (builder helper).  Zero values erase the cell.
/// Enforces class validity: matching target, total degree in [1, cap], and
/// n == 0 for plane classes.
void set_cell(Potential& p, CurveClass cls, ExponentTuple e, const Rational& value);

/// Stored ordinary coefficient; 0 when the cell is absent.  No cap check —
/// internal lookup used by solvers and tests.
Rational ordinary_at(const Potential& p, CurveClass cls, ExponentTuple e);

/// p + weight·q, coefficientwise.  Targets and caps must agree.
Potential add(const Potential& p, const Potential& q, const Rational& weight);

/// weight·p (coefficientwise rescale).
Potential scale(const Potential& p, const Rational& weight);

/// Product: double convolution over class splittings (both parts of positive
/// total degree) and exponent splittings, truncated to the shared cap.
Potential mul(const Potential& p, const Potential& q);

/// Multiply by weight·u^shift.a v^shift.b w^shift.c.
Potential mul_monomial(const Potential& p, ExponentTuple shift, const Rational& weight);

/// Ordinary partial derivative in u, v or w.
Potential deriv_poly(const Potential& p, Var var);

/// Exponential derivative: each class slice is scaled by the pairing of the
/// class with the direction (s -> total degree; u1 -> m, u2 -> n, quadric
/// only).
Potential deriv_exp(const Potential& p, Var dir);

/// Inverse of deriv_exp(·, s) applied `times` times; well defined because
/// every stored class has positive total degree.
Potential integrate_exp(const Potential& p, Var dir, int times);

/// Enumerative accessor: stored coefficient × a!·b!·c!.  Throws
/// std::out_of_range for a class beyond the cap ("not computed" is not
/// "zero"); returns 0 for an absent cell within the cap.
Rational coefficient(const Potential& p, CurveClass cls, ExponentTuple e);

/// True when no cell is stored.
bool is_zero(const Potential& p);

/// Cellwise equality of the stored series (kind tags are ignored).
bool same_series(const Potential& p, const Potential& q);

/// Canonical serialization: one-line JSON with cells sorted lexicographically
/// by (class, exponent tuple); values as "num/den" in lowest terms.  Equal
/// potentials serialize to identical bytes.
std::string serialize(const Potential& p);

/// Parse the canonical serialization (tolerant of unsorted cells and of bare
/// integer values); validates every invariant listed above.
Potential parse_potential(std::string_view text);

// Formula-transcription sugar.  The named operations above are the interface;
// these let the differential-polynomial builders read like the equations.
inline Potential operator+(const Potential& p, const Potential& q) { return add(p, q, 1); }
inline Potential operator-(const Potential& p, const Potential& q) { return add(p, q, -1); }
inline Potential operator*(const Potential& p, const Potential& q) { return mul(p, q); }

}  // namespace charnum
