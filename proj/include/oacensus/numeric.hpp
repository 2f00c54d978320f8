#pragma once

#include <cstdint>
#include <string>

#include "oacensus/errors.hpp"

namespace oac {

/// All census counts and identity left/right sides are exact 128-bit
/// integers; arithmetic that could overflow goes through the checked helpers.
using i128 = __int128;

std::string to_string(i128 x);
i128 parse_i128(const std::string& s);

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) fail_overflow("128-bit addition overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) fail_overflow("128-bit multiplication overflow");
    return r;
}

/// base^e with overflow checking; e >= 0.
i128 checked_pow(i128 base, int e);

i128 gcd128(i128 a, i128 b);

/// Binomial coefficient; 0 when k < 0 or k > n (the paper's convention
/// for C(v,u) with v < u).
i128 binomial(long long n, long long k);

/// Exact rational with 128-bit numerator/denominator, always normalized
/// (den > 0, gcd(num, den) = 1). Densities and identity scalars live here;
/// floats appear only in human-readable reports.
struct Rational {
    i128 num = 0;
    i128 den = 1;

    Rational() = default;
    Rational(i128 n) : num(n), den(1) {}
    Rational(i128 n, i128 d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return {-num, den}; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_zero() const { return num == 0; }
    std::string str() const; // "p/q" or "p" when q == 1
    double approx() const;   // display only
};

} // namespace oac
