/**
 * @file types.hpp
 * @brief Core domain vocabulary: targets, curve classes, exponent tuples,
 *        potential kinds, and the basic derivative directions.
 *
 * Conventions fixed here and used everywhere:
 *  - A curve class is graded exponentially: degree d on the plane, bi-degree
 *    (m,n) on the quadric surface.  The plane case is stored with n == 0.
 *  - The three polynomial variables are u (incidence/point conditions),
 *    v (tangency conditions) and w (flag conditions: tangency at a marked
 *    point).  An ExponentTuple (a,b,c) is the monomial u^a v^b w^c.
 *  - Exponential directions: s pairs a class with its total degree; u1 and u2
 *    (quadric only) pair with the two bi-degree components.
 */
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace charnum {

enum class Target { Plane, Quadric };

inline std::string target_name(Target t) {
    return t == Target::Plane ? "p2" : "p1xp1";
}

inline Target target_from_name(std::string_view s) {
    if (s == "p2") return Target::Plane;
    if (s == "p1xp1") return Target::Quadric;
    throw std::invalid_argument("unknown target: " + std::string(s));
}

/// Exponential grading: total degree d on the plane (n == 0), bi-degree (m,n)
/// on the quadric.  Classes of total degree 0 never occur inside a potential.
struct CurveClass {
    Target target = Target::Plane;
    int m = 0;
    int n = 0;

    int total() const { return m + n; }
    auto operator<=>(const CurveClass&) const = default;
};

inline CurveClass plane_class(int d) { return CurveClass{Target::Plane, d, 0}; }
inline CurveClass quadric_class(int m, int n) { return CurveClass{Target::Quadric, m, n}; }

/// The quadric involution exchanging the two rulings: (m,n) -> (n,m).
inline CurveClass swapped(CurveClass c) {
    if (c.target != Target::Quadric)
        throw std::invalid_argument("swap involution applies to quadric classes only");
    return CurveClass{c.target, c.n, c.m};
}

inline std::string class_name(CurveClass c) {
    if (c.target == Target::Plane) return std::to_string(c.m);
    return std::to_string(c.m) + "," + std::to_string(c.n);
}

/// Monomial u^a v^b w^c.
struct ExponentTuple {
    int a = 0;
    int b = 0;
    int c = 0;

    int condition_total() const { return a + b + 2 * c; }
    auto operator<=>(const ExponentTuple&) const = default;
};

/// Named potentials handled by the engine.  For the enriched series with
/// superscript > 0 (P1, P2, P12, P3, Q1, Q2, Q12, Q3) the stored object is the
/// double s-derivative, which is the form the defining equations deliver.
enum class Kind {
    G,     ///< tangency/characteristic-number potential
    P0, P1, P2,      ///< plane P-series (P1, P2 stored as _ss)
    P12, P3,         ///< quadric P-series (stored as _ss)
    Q0, Q1, Q2,      ///< plane Q-series (Q1, Q2 stored as _ss)
    Q12, Q3,         ///< quadric Q-series (stored as _ss)
    K, KL, KP,       ///< cusp potentials: cusp free / on a divisor / at a point
    KLirr, KPirr,    ///< quadric cusp potentials, multiple-rule-cover part removed
    H,               ///< simple genus-zero branched-cover potential (quadric aux)
    I, J,            ///< covers of the two rulings (quadric aux)
    F,               ///< triple-contact potential
    Scratch,         ///< unpublished intermediate
};

inline std::string kind_name(Kind k) {
    switch (k) {
        case Kind::G: return "G";
        case Kind::P0: return "P0";
        case Kind::P1: return "P1";
        case Kind::P2: return "P2";
        case Kind::P12: return "P12";
        case Kind::P3: return "P3";
        case Kind::Q0: return "Q0";
        case Kind::Q1: return "Q1";
        case Kind::Q2: return "Q2";
        case Kind::Q12: return "Q12";
        case Kind::Q3: return "Q3";
        case Kind::K: return "K";
        case Kind::KL: return "KL";
        case Kind::KP: return "KP";
        case Kind::KLirr: return "KLirr";
        case Kind::KPirr: return "KPirr";
        case Kind::H: return "H";
        case Kind::I: return "I";
        case Kind::J: return "J";
        case Kind::F: return "F";
        case Kind::Scratch: return "Scratch";
    }
    throw std::logic_error("unreachable kind");
}

inline Kind kind_from_name(std::string_view s) {
    if (s == "G") return Kind::G;
    if (s == "P0") return Kind::P0;
    if (s == "P1") return Kind::P1;
    if (s == "P2") return Kind::P2;
    if (s == "P12") return Kind::P12;
    if (s == "P3") return Kind::P3;
    if (s == "Q0") return Kind::Q0;
    if (s == "Q1") return Kind::Q1;
    if (s == "Q2") return Kind::Q2;
    if (s == "Q12") return Kind::Q12;
    if (s == "Q3") return Kind::Q3;
    if (s == "K") return Kind::K;
    if (s == "KL") return Kind::KL;
    if (s == "KP") return Kind::KP;
    if (s == "KLirr") return Kind::KLirr;
    if (s == "KPirr") return Kind::KPirr;
    if (s == "H") return Kind::H;
    if (s == "I") return Kind::I;
    if (s == "J") return Kind::J;
    if (s == "F") return Kind::F;
    if (s == "Scratch") return Kind::Scratch;
    throw std::invalid_argument("unknown potential kind: " + std::string(s));
}

/// Basic derivative directions.  U, V, W act on the polynomial variables;
/// S, U1, U2 act through the exponential grading (class pairing).
enum class Var { S, U, V, W, U1, U2 };

inline std::string var_name(Var v) {
    switch (v) {
        case Var::S: return "s";
        case Var::U: return "u";
        case Var::V: return "v";
        case Var::W: return "w";
        case Var::U1: return "u1";
        case Var::U2: return "u2";
    }
    throw std::logic_error("unreachable var");
}

}  // namespace charnum
