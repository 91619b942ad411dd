/**
 * @file test_util.hpp
 * @brief Shared helpers for the test suite: a deterministic pseudo-random
 *        potential generator for the algebraic-law property tests.
 *
 * The generator is a plain 64-bit LCG with fixed seeds, so every "random"
 * property test is reproducible bit for bit.
 */
#pragma once

#include <cstdint>

#include "charnum/potential.hpp"

namespace charnum::testutil {

/// Deterministic 64-bit LCG (Knuth's MMIX constants).
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return state_;
    }

    /// Uniform-ish draw from [0, n).
    int below(int n) { return static_cast<int>((next() >> 33) % static_cast<std::uint64_t>(n)); }

  private:
    std::uint64_t state_;
};

/// Small rational with mixed signs and denominators, never reduced from zero
/// on purpose (zero draws simply leave the cell unset).
inline Rational random_rational(Lcg& rng) {
    return rat(rng.below(41) - 20, 1 + rng.below(7));
}

/// Sparse potential with `cells` attempted insertions of random cells across
/// all class totals in [1, cap] and small exponents.
inline Potential random_potential(Target target, int cap, Lcg& rng, int cells = 12) {
    Potential p = make_zero(target, cap);
    for (int i = 0; i < cells; ++i) {
        int total = 1 + rng.below(cap);
        CurveClass cls = plane_class(total);
        if (target == Target::Quadric) {
            int m = rng.below(total + 1);
            cls = quadric_class(m, total - m);
        }
        ExponentTuple e{rng.below(4), rng.below(4), rng.below(3)};
        set_cell(p, cls, e, random_rational(rng));
    }
    return p;
}

}  // namespace charnum::testutil
