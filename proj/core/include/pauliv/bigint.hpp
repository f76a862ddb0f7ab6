#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pauliv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow10(unsigned k) {
    BigInt r = 1;
    BigInt b = 10;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline BigInt five_pow(unsigned t) {
    BigInt r = 1;
    BigInt b = 5;
    while (t) {
        if (t & 1) r *= b;
        b *= b;
        t >>= 1;
    }
    return r;
}

// floor(a/b) for b > 0
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    return -floor_div(-a, b);
}

inline BigInt floor_rat(const BigRat& x) {
    return floor_div(numerator(x), denominator(x));
}

inline BigInt ceil_rat(const BigRat& x) {
    return ceil_div(numerator(x), denominator(x));
}

// nearest integer, halves round up
inline BigInt round_rat(const BigRat& x) {
    return floor_rat(x + BigRat(1, 2));
}

inline BigInt isqrt_floor(const BigInt& n) {
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt r = isqrt_floor(n);
    if (root) *root = r;
    return r * r == n;
}

// smallest k >= 0 with x * 10^k >= 1, for x > 0 (i.e. ceil(log10(1/x)))
inline int ceil_log10_inverse(const BigRat& x) {
    int k = 0;
    BigRat v = x;
    while (v < 1) {
        v *= 10;
        ++k;
        if (k > 100000) throw std::overflow_error("ceil_log10_inverse: value too small");
    }
    return k;
}

// extended gcd: returns g = gcd(a,b) and coefficients with u*a + v*b = g
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v) {
    BigInt old_r = a, r = b;
    BigInt old_s = 1, s = 0;
    BigInt old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    u = old_s;
    v = old_t;
    return old_r;
}

inline unsigned decimal_digits(const BigInt& n) {
    if (n == 0) return 1;
    BigInt a = n < 0 ? BigInt(-n) : n;
    return static_cast<unsigned>(a.str().size());
}

// Directed decimal rendering of a rational with `sig` significant digits.
// round_up=false rounds toward -inf, true toward +inf; result re-parses to a
// bound on x from the chosen side.
std::string rat_to_decimal_string(const BigRat& x, int sig, bool round_up);

} // namespace pauliv
