#pragma once

#include "pauliv/bigint.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pauliv {

// Exact Gaussian integer a + bi with arbitrary-precision components.
struct GaussianInt {
    BigInt re;
    BigInt im;

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    BigInt norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianInt& o) const { return !(*this == o); }

    bool divisible_by(const BigInt& m) const { return re % m == 0 && im % m == 0; }
    GaussianInt divided_by(const BigInt& m) const { return {re / m, im / m}; }

    std::string str() const { return re.str() + "," + im.str(); }
};

inline GaussianInt gaussian_mul(const GaussianInt& z, const GaussianInt& w) { return z * w; }

// Quotient rounded to the nearest Gaussian integer (componentwise nearest).
inline GaussianInt gaussian_div_round(const GaussianInt& a, const GaussianInt& b) {
    BigInt n = b.norm();
    GaussianInt num = a * b.conj();
    return {round_rat(BigRat(num.re, n)), round_rat(BigRat(num.im, n))};
}

// Euclidean gcd in Z[i]; result is defined up to a unit.
inline GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        GaussianInt q = gaussian_div_round(a, b);
        GaussianInt r = a - q * b;
        a = b;
        b = r;
    }
    return a;
}

// Parse "re,im" (both decimal integers, optional signs).
inline GaussianInt parse_gaussian(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("Gaussian integer must be 're,im': '" + text + "'");
    return {BigInt(text.substr(0, comma)), BigInt(text.substr(comma + 1))};
}

} // namespace pauliv
