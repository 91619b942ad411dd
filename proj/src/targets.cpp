/// @file targets.cpp
/// @brief Operator tables, admissibility strata, and the swap involution.

#include "charnum/targets.hpp"

#include <stdexcept>

namespace charnum {

namespace {

TargetDescriptor make_plane_descriptor() {
    TargetDescriptor d;
    d.id = Target::Plane;
    d.basis = {"T0", "T1", "T2"};
    // Poincare pairing of (1, line, point) on the plane.
    d.pairing = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    d.divisor_op = DiffOperator{{
        {ExponentTuple{0, 0, 0}, 1, Var::S},
        {ExponentTuple{0, 1, 0}, 2, Var::U},
    }};
    d.point_op = DiffOperator{{
        {ExponentTuple{0, 1, 0}, 2, Var::S},
        {ExponentTuple{0, 2, 0}, 2, Var::U},
        {ExponentTuple{0, 0, 1}, 2, Var::U},
    }};
    return d;
}

TargetDescriptor make_quadric_descriptor() {
    TargetDescriptor d;
    d.id = Target::Quadric;
    d.basis = {"T0", "T1", "T2", "T3"};
    // Poincare pairing of (1, ruling class 1, ruling class 2, point).
    d.pairing = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    d.ruling1_op = DiffOperator{{
        {ExponentTuple{0, 0, 0}, 1, Var::U2},
        {ExponentTuple{0, 1, 0}, 2, Var::U},
    }};
    d.ruling2_op = DiffOperator{{
        {ExponentTuple{0, 0, 0}, 1, Var::U1},
        {ExponentTuple{0, 1, 0}, 2, Var::U},
    }};
    d.point_op = DiffOperator{{
        {ExponentTuple{0, 1, 0}, 2, Var::U1},
        {ExponentTuple{0, 1, 0}, 2, Var::U2},
        {ExponentTuple{0, 2, 0}, 4, Var::U},
        {ExponentTuple{0, 0, 1}, 2, Var::U},
    }};
    // L = L1 + L2 = d/ds + 4v d/du.
    d.divisor_op = DiffOperator{{
        {ExponentTuple{0, 0, 0}, 1, Var::S},
        {ExponentTuple{0, 1, 0}, 4, Var::U},
    }};
    return d;
}

}  // namespace

const TargetDescriptor& descriptor(Target t) {
    static const TargetDescriptor plane = make_plane_descriptor();
    static const TargetDescriptor quadric = make_quadric_descriptor();
    return t == Target::Plane ? plane : quadric;
}

const DiffOperator& op_L(Target t) { return descriptor(t).divisor_op; }
const DiffOperator& op_P(Target t) { return descriptor(t).point_op; }
const DiffOperator& op_L1() { return descriptor(Target::Quadric).ruling1_op; }
const DiffOperator& op_L2() { return descriptor(Target::Quadric).ruling2_op; }

Potential operator_apply(const DiffOperator& op, const Potential& p) {
    Potential result = make_zero(p.target, p.cap);
    for (const auto& term : op.terms) {
        Potential derived;
        switch (term.deriv) {
            case Var::U:
            case Var::V:
            case Var::W:
                derived = deriv_poly(p, term.deriv);
                break;
            default:
                derived = deriv_exp(p, term.deriv);  // validates target itself
                break;
        }
        result = add(result, mul_monomial(derived, term.shift, term.weight), 1);
    }
    return result;
}

bool kind_valid_for(Kind kind, Target target) {
    switch (kind) {
        case Kind::G:
        case Kind::P0:
        case Kind::Q0:
        case Kind::K:
        case Kind::KL:
        case Kind::KP:
        case Kind::F:
        case Kind::Scratch:
            return true;
        case Kind::P1:
        case Kind::P2:
        case Kind::Q1:
        case Kind::Q2:
            return target == Target::Plane;
        case Kind::P12:
        case Kind::P3:
        case Kind::Q12:
        case Kind::Q3:
        case Kind::KLirr:
        case Kind::KPirr:
        case Kind::H:
        case Kind::I:
        case Kind::J:
            return target == Target::Quadric;
    }
    return false;
}

int expected_conditions(Kind kind, CurveClass cls) {
    if (!kind_valid_for(kind, cls.target))
        throw std::invalid_argument("kind " + kind_name(kind) + " is not defined for target " +
                                    target_name(cls.target));
    if (kind == Kind::Scratch)
        throw std::invalid_argument("scratch potentials have no admissibility stratum");
    int t = cls.total();
    // Base stratum of G: 3d-1 on the plane, 2(m+n)-1 on the quadric.  Every
    // other kind sits at a fixed offset, read off from its defining
    // expression (s-derivatives do not move the stratum; each v lowers it by
    // one, each w by two relative to G).
    int base = cls.target == Target::Plane ? 3 * t - 1 : 2 * t - 1;
    switch (kind) {
        case Kind::G:
        case Kind::I:
        case Kind::J:
            return base;
        case Kind::P0:
        case Kind::Q0:
        case Kind::K:
        case Kind::H:
            return base - 1;
        case Kind::P1:
        case Kind::Q1:
        case Kind::P12:
        case Kind::Q12:
        case Kind::KL:
        case Kind::KLirr:
        case Kind::F:
            return base - 2;
        case Kind::P2:
        case Kind::Q2:
        case Kind::P3:
        case Kind::Q3:
        case Kind::KP:
        case Kind::KPirr:
            return base - 3;
        default:
            throw std::logic_error("unreachable kind in expected_conditions");
    }
}

void assert_on_stratum(const Potential& p) {
    for (const auto& [cls, cells] : p.slices) {
        int want = expected_conditions(p.kind, cls);
        for (const auto& [e, value] : cells) {
            (void)value;
            if (e.condition_total() != want)
                throw std::logic_error("off-stratum cell in " + kind_name(p.kind) + " at class " +
                                       class_name(cls) + ", exponents (" + std::to_string(e.a) +
                                       "," + std::to_string(e.b) + "," + std::to_string(e.c) +
                                       "): a+b+2c = " + std::to_string(e.condition_total()) +
                                       ", expected " + std::to_string(want));
            if (p.kind == Kind::H && (e.a != 0 || e.c != 0))
                throw std::logic_error("branched-cover potential H must be univariate in v");
        }
    }
}

Potential published(Potential p, Kind kind) {
    p.kind = kind;
    assert_on_stratum(p);
    return p;
}

Potential swap_series(const Potential& p) {
    if (p.target != Target::Quadric)
        throw std::invalid_argument("swap involution applies to quadric potentials only");
    Potential r = make_zero(p.target, p.cap, p.kind);
    for (const auto& [cls, cells] : p.slices) r.slices[swapped(cls)] = cells;
    return r;
}

}  // namespace charnum
