/// @file potential.cpp
/// @brief Sparse exact series arithmetic: the convolution kernel and friends.

#include "charnum/potential.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace charnum {

namespace {

/// Shared precondition of the binary operations.
void require_compatible(const Potential& p, const Potential& q, const char* op) {
    if (p.target != q.target)
        throw std::invalid_argument(std::string(op) + ": target mismatch");
    if (p.cap != q.cap)
        throw std::invalid_argument(std::string(op) + ": cap mismatch");
}

void require_valid_class(const Potential& p, CurveClass cls) {
    if (cls.target != p.target)
        throw std::invalid_argument("class target does not match potential target");
    if (p.target == Target::Plane && cls.n != 0)
        throw std::invalid_argument("plane class must have n == 0");
    if (cls.m < 0 || cls.n < 0)
        throw std::invalid_argument("negative class degree");
    if (cls.total() < 1 || cls.total() > p.cap)
        throw std::invalid_argument("class total degree outside [1, cap]");
}

void require_valid_exponent(ExponentTuple e) {
    if (e.a < 0 || e.b < 0 || e.c < 0)
        throw std::invalid_argument("negative exponent");
}

/// Class pairing with an exponential direction; the grading-side analogue of
/// a derivative.  s pairs with the total degree, u1/u2 with the bi-degree
/// components (quadric only).
long pairing(Target target, CurveClass cls, Var dir) {
    switch (dir) {
        case Var::S:
            return cls.total();
        case Var::U1:
            if (target != Target::Quadric)
                throw std::invalid_argument("u1 derivative requested on a plane potential");
            return cls.m;
        case Var::U2:
            if (target != Target::Quadric)
                throw std::invalid_argument("u2 derivative requested on a plane potential");
            return cls.n;
        default:
            throw std::invalid_argument("not an exponential direction: " + var_name(dir));
    }
}

/// Drop zero coefficients and empty class slices (sparse normal form).
void normalize(Potential& p) {
    for (auto cls_it = p.slices.begin(); cls_it != p.slices.end();) {
        auto& cells = cls_it->second;
        for (auto it = cells.begin(); it != cells.end();) {
            if (it->second == 0)
                it = cells.erase(it);
            else
                ++it;
        }
        if (cells.empty())
            cls_it = p.slices.erase(cls_it);
        else
            ++cls_it;
    }
}

}  // namespace

Potential make_zero(Target target, int cap, Kind kind) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    Potential p;
    p.target = target;
    p.kind = kind;
    p.cap = cap;
    return p;
}

void set_cell(Potential& p, CurveClass cls, ExponentTuple e, const Rational& value) {
    require_valid_class(p, cls);
    require_valid_exponent(e);
    if (value == 0) {
        auto cls_it = p.slices.find(cls);
        if (cls_it != p.slices.end()) {
            cls_it->second.erase(e);
            if (cls_it->second.empty()) p.slices.erase(cls_it);
        }
        return;
    }
    p.slices[cls][e] = value;
}

Rational ordinary_at(const Potential& p, CurveClass cls, ExponentTuple e) {
    auto cls_it = p.slices.find(cls);
    if (cls_it == p.slices.end()) return 0;
    auto it = cls_it->second.find(e);
    if (it == cls_it->second.end()) return 0;
    return it->second;
}

Potential add(const Potential& p, const Potential& q, const Rational& weight) {
    require_compatible(p, q, "add");
    Potential r = p;
    r.kind = Kind::Scratch;
    if (weight != 0) {
        for (const auto& [cls, cells] : q.slices)
            for (const auto& [e, value] : cells)
                r.slices[cls][e] += weight * value;
    }
    normalize(r);
    return r;
}

Potential scale(const Potential& p, const Rational& weight) {
    Potential r = make_zero(p.target, p.cap);
    if (weight == 0) return r;
    r.slices = p.slices;
    for (auto& [cls, cells] : r.slices)
        for (auto& [e, value] : cells)
            value *= weight;
    return r;
}

Potential mul(const Potential& p, const Potential& q) {
    require_compatible(p, q, "mul");
    Potential r = make_zero(p.target, p.cap);
    for (const auto& [cls1, cells1] : p.slices) {
        for (const auto& [cls2, cells2] : q.slices) {
            // Both factors carry total degree >= 1, so the product class is
            // strictly larger than either part; beyond the cap it is dropped.
            if (cls1.total() + cls2.total() > p.cap) continue;
            CurveClass cls{p.target, cls1.m + cls2.m, cls1.n + cls2.n};
            auto& out = r.slices[cls];
            for (const auto& [e1, v1] : cells1)
                for (const auto& [e2, v2] : cells2)
                    out[ExponentTuple{e1.a + e2.a, e1.b + e2.b, e1.c + e2.c}] += v1 * v2;
        }
    }
    normalize(r);
    return r;
}

Potential mul_monomial(const Potential& p, ExponentTuple shift, const Rational& weight) {
    require_valid_exponent(shift);
    Potential r = make_zero(p.target, p.cap);
    if (weight == 0) return r;
    for (const auto& [cls, cells] : p.slices) {
        auto& out = r.slices[cls];
        for (const auto& [e, value] : cells)
            out[ExponentTuple{e.a + shift.a, e.b + shift.b, e.c + shift.c}] = weight * value;
    }
    normalize(r);
    return r;
}

Potential deriv_poly(const Potential& p, Var var) {
    if (var != Var::U && var != Var::V && var != Var::W)
        throw std::invalid_argument("deriv_poly expects u, v or w");
    Potential r = make_zero(p.target, p.cap);
    for (const auto& [cls, cells] : p.slices) {
        auto& out = r.slices[cls];
        for (const auto& [e, value] : cells) {
            ExponentTuple d = e;
            long exponent = 0;
            switch (var) {
                case Var::U: exponent = e.a; d.a -= 1; break;
                case Var::V: exponent = e.b; d.b -= 1; break;
                default:     exponent = e.c; d.c -= 1; break;
            }
            if (exponent == 0) continue;
            out[d] += exponent * value;
        }
    }
    normalize(r);
    return r;
}

Potential deriv_exp(const Potential& p, Var dir) {
    Potential r = make_zero(p.target, p.cap);
    for (const auto& [cls, cells] : p.slices) {
        long factor = pairing(p.target, cls, dir);
        if (factor == 0) continue;
        auto& out = r.slices[cls];
        for (const auto& [e, value] : cells)
            out[e] = factor * value;
    }
    return r;
}

Potential integrate_exp(const Potential& p, Var dir, int times) {
    if (dir != Var::S)
        throw std::invalid_argument("integrate_exp supports the s direction only");
    if (times < 1)
        throw std::invalid_argument("integrate_exp needs times >= 1");
    Potential r = make_zero(p.target, p.cap);
    for (const auto& [cls, cells] : p.slices) {
        // Total degree >= 1, so the pairing is positive and no integration
        // constant can arise.
        Rational divisor = 1;
        for (int i = 0; i < times; ++i) divisor *= cls.total();
        auto& out = r.slices[cls];
        for (const auto& [e, value] : cells)
            out[e] = value / divisor;
    }
    return r;
}

Rational coefficient(const Potential& p, CurveClass cls, ExponentTuple e) {
    if (cls.target != p.target)
        throw std::invalid_argument("class target does not match potential target");
    if (p.target == Target::Plane && cls.n != 0)
        throw std::invalid_argument("plane class must have n == 0");
    if (cls.total() < 1)
        throw std::invalid_argument("class total degree must be >= 1");
    if (cls.total() > p.cap)
        throw std::out_of_range("class total degree " + std::to_string(cls.total()) +
                                " beyond cap " + std::to_string(p.cap) +
                                " (not computed; increase cap)");
    require_valid_exponent(e);
    Rational factorials = Rational(factorial(e.a)) * Rational(factorial(e.b)) *
                          Rational(factorial(e.c));
    return ordinary_at(p, cls, e) * factorials;
}

bool is_zero(const Potential& p) { return p.slices.empty(); }

bool same_series(const Potential& p, const Potential& q) {
    return p.target == q.target && p.cap == q.cap && p.slices == q.slices;
}

std::string serialize(const Potential& p) {
    // Hand-rolled writer: the canonical byte layout is part of the contract
    // (cache files must be reproducible bit for bit).  std::map iteration is
    // already the required lexicographic order.
    std::ostringstream out;
    out << "{\"target\":\"" << target_name(p.target) << "\",\"kind\":\""
        << kind_name(p.kind) << "\",\"cap\":" << p.cap << ",\"cells\":[";
    bool first = true;
    for (const auto& [cls, cells] : p.slices) {
        for (const auto& [e, value] : cells) {
            if (!first) out << ",";
            first = false;
            out << "{\"class\":[" << cls.m;
            if (p.target == Target::Quadric) out << "," << cls.n;
            out << "],\"exp\":[" << e.a << "," << e.b << "," << e.c
                << "],\"value\":\"" << to_fraction_string(value) << "\"}";
        }
    }
    out << "]}";
    return out.str();
}

Potential parse_potential(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("potential parse error: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("target") || !doc.contains("kind") ||
        !doc.contains("cap") || !doc.contains("cells"))
        throw std::invalid_argument("potential parse error: missing field");

    Target target = target_from_name(doc.at("target").get<std::string>());
    Kind kind = kind_from_name(doc.at("kind").get<std::string>());
    if (!doc.at("cap").is_number_integer())
        throw std::invalid_argument("potential parse error: cap must be an integer");
    int cap = doc.at("cap").get<int>();
    Potential p = make_zero(target, cap, kind);

    if (!doc.at("cells").is_array())
        throw std::invalid_argument("potential parse error: cells must be an array");
    for (const auto& cell : doc.at("cells")) {
        if (!cell.is_object() || !cell.contains("class") || !cell.contains("exp") ||
            !cell.contains("value"))
            throw std::invalid_argument("potential parse error: malformed cell");
        const auto& cls_arr = cell.at("class");
        size_t want = target == Target::Plane ? 1 : 2;
        if (!cls_arr.is_array() || cls_arr.size() != want)
            throw std::invalid_argument("potential parse error: class arity mismatch");
        CurveClass cls{target, cls_arr.at(0).get<int>(),
                       target == Target::Quadric ? cls_arr.at(1).get<int>() : 0};
        const auto& exp_arr = cell.at("exp");
        if (!exp_arr.is_array() || exp_arr.size() != 3)
            throw std::invalid_argument("potential parse error: exp must have 3 entries");
        ExponentTuple e{exp_arr.at(0).get<int>(), exp_arr.at(1).get<int>(),
                        exp_arr.at(2).get<int>()};
        Rational value = parse_rational(cell.at("value").get<std::string>());
        if (value == 0)
            throw std::invalid_argument("potential parse error: explicit zero cell");
        if (ordinary_at(p, cls, e) != 0)
            throw std::invalid_argument("potential parse error: duplicate cell");
        set_cell(p, cls, e, value);
    }
    return p;
}

}  // namespace charnum
