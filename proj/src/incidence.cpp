/// @file incidence.cpp
/// @brief Incidence-number recursions derived from quantum-product
///        associativity.

#include "charnum/incidence.hpp"

#include <stdexcept>

namespace charnum {

std::vector<std::pair<int, Integer>> incidence_plane(int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    std::vector<Integer> n(cap + 1);
    n[1] = 1;
    for (int d = 2; d <= cap; ++d) {
        Integer total = 0;
        for (int dp = 1; dp < d; ++dp) {
            int dq = d - dp;
            Integer weight = Integer(dq) * binomial(3 * d - 4, 3 * dp - 2) -
                             Integer(dp) * binomial(3 * d - 4, 3 * dp - 1);
            total += n[dp] * n[dq] * Integer(dp) * Integer(dp) * Integer(dq) * weight;
        }
        n[d] = total;
    }
    std::vector<std::pair<int, Integer>> out;
    for (int d = 1; d <= cap; ++d) out.emplace_back(d, n[d]);
    return out;
}

namespace {

Integer ipow(long base, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

/// Second associativity relation, used purely as a consistency check: for
/// every class with m+n >= 2,
///   N = sum N' N'' [ C(2d-4, 2d'-2) (m'^2 n''^2 + m'n'm''n'')
///                  - C(2d-4, 2d'-1) (m'^2 n' n'' + m' n'^2 m'') ].
void check_quadric_consistency(const std::map<CurveClass, Integer>& n, int cap) {
    for (const auto& [cls, value] : n) {
        int d = cls.total();
        if (d < 2) continue;
        Integer rhs = 0;
        for (int mp = 0; mp <= cls.m; ++mp) {
            for (int np = 0; np <= cls.n; ++np) {
                int mq = cls.m - mp, nq = cls.n - np;
                if (mp + np == 0 || mq + nq == 0) continue;
                int dp = mp + np;
                auto itp = n.find(quadric_class(mp, np));
                auto itq = n.find(quadric_class(mq, nq));
                if (itp == n.end() || itq == n.end() || itp->second == 0 || itq->second == 0)
                    continue;
                Integer first = ipow(mp, 2) * ipow(nq, 2) +
                                Integer(mp) * Integer(np) * Integer(mq) * Integer(nq);
                Integer second = ipow(mp, 2) * Integer(np) * Integer(nq) +
                                 Integer(mp) * ipow(np, 2) * Integer(mq);
                rhs += itp->second * itq->second *
                       (binomial(2 * d - 4, 2 * dp - 2) * first -
                        binomial(2 * d - 4, 2 * dp - 1) * second);
            }
        }
        if (rhs != value)
            throw std::logic_error("quadric associativity relations disagree at class " +
                                   class_name(cls) + " (cap " + std::to_string(cap) + ")");
    }
}

}  // namespace

std::map<CurveClass, Integer> incidence_quadric(int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    std::map<CurveClass, Integer> n;
    // Rulings themselves; higher multiples of a ruling carry no incidence
    // numbers (a multiple cover of a ruling cannot pass through two general
    // points).
    n[quadric_class(1, 0)] = 1;
    n[quadric_class(0, 1)] = 1;
    for (int m = 2; m <= cap; ++m) {
        n[quadric_class(m, 0)] = 0;
        n[quadric_class(0, m)] = 0;
    }
    // Primary relation, solvable whenever both bi-degree components are
    // positive:
    //   2mn N = sum_{split} C(2d-2, 2d'-1) N' N'' (m'^3 n''^3 - m'^2 n' m'' n''^2).
    for (int d = 2; d <= cap; ++d) {
        for (int m = 1; m < d; ++m) {
            int nn = d - m;
            Rational rhs = 0;
            for (int mp = 0; mp <= m; ++mp) {
                for (int np = 0; np <= nn; ++np) {
                    int mq = m - mp, nq = nn - np;
                    if (mp + np == 0 || mq + nq == 0) continue;
                    int dp = mp + np;
                    const Integer& np_val = n.at(quadric_class(mp, np));
                    const Integer& nq_val = n.at(quadric_class(mq, nq));
                    if (np_val == 0 || nq_val == 0) continue;
                    Integer weight = ipow(mp, 3) * ipow(nq, 3) -
                                     ipow(mp, 2) * Integer(np) * Integer(mq) * ipow(nq, 2);
                    rhs += Rational(binomial(2 * d - 2, 2 * dp - 1) * np_val * nq_val * weight);
                }
            }
            Rational value = rhs / rat(2L * m * nn);
            if (!is_integral(value))
                throw std::logic_error("quadric incidence number at class " +
                                       class_name(quadric_class(m, nn)) + " is not an integer");
            n[quadric_class(m, nn)] = value.get_num();
        }
    }
    check_quadric_consistency(n, cap);
    return n;
}

}  // namespace charnum
