#include "oacensus/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace oac {

std::string to_string(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    // Careful with INT128_MIN: negate digit by digit via unsigned.
    unsigned __int128 u = neg ? (unsigned __int128)(-(x + 1)) + 1 : (unsigned __int128)x;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

i128 parse_i128(const std::string& s) {
    if (s.empty()) fail_io("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) fail_io("bad integer literal: " + s);
    i128 v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit((unsigned char)s[i])) fail_io("bad integer literal: " + s);
        v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

i128 checked_pow(i128 base, int e) {
    if (e < 0) fail_precondition("negative exponent");
    i128 r = 1;
    while (e > 0) {
        if (e & 1) r = checked_mul(r, base);
        e >>= 1;
        if (e) base = checked_mul(base, base);
    }
    return r;
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    i128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i; // exact: r is C(n-k+i, i) * i! / i! at each step
    }
    return r;
}

Rational::Rational(i128 n, i128 d) : num(n), den(d) {
    if (den == 0) fail_precondition("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                    checked_mul(den, o.den));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
}

bool Rational::operator<(const Rational& o) const {
    return checked_mul(num, o.den) < checked_mul(o.num, den);
}

std::string Rational::str() const {
    if (den == 1) return to_string(num);
    return to_string(num) + "/" + to_string(den);
}

double Rational::approx() const { return double(num) / double(den); }

} // namespace oac
