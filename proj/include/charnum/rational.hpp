/**
 * @file rational.hpp
 * @brief Exact rational scalars and small integer-combinatorics helpers.
 *
 * Every coefficient in the engine is an arbitrary-precision rational; no
 * floating point exists anywhere. GMP's canonical mpq_class is used directly,
 * with helpers that guard the one pitfall of that type: two-argument
 * construction does not reduce to lowest terms by itself.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace charnum {

using Rational = mpq_class;
using Integer = mpz_class;

/// Build a rational in lowest terms from an integer pair.
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// n! as an exact integer.
inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// Binomial coefficient C(n, k); zero when k > n (mirrors the library call).
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

/// True when the rational is an integer (denominator 1 in lowest terms).
inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// Canonical "num/den" text, the denominator always written out ("3/1").
/// This is the cache-file form; display code elides the "/1".
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Human-facing form: bare integer when the denominator is 1, else "num/den".
inline std::string to_display_string(const Rational& r) {
    if (is_integral(r)) return r.get_num().get_str();
    return to_fraction_string(r);
}

/// Parse "num/den" or a bare integer; result is put in lowest terms.
inline Rational parse_rational(std::string_view text) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw std::invalid_argument("unparseable rational: " + std::string(text));
    if (r.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

}  // namespace charnum
