#pragma once

#include "pauliv/meniscus.hpp"

#include <functional>

namespace pauliv {

struct Convergent {
    BigInt p;
    BigInt q;
    int index = 0;
};

// Continued-fraction approximant of a rational g with |g q - p| < 1/r and
// 1 <= q <= r. Runs the standard recursion p_{j+1} = a_{j+1} p_j + p_{j-1},
// q_{j+1} = a_{j+1} q_j + q_{j-1}; terminates within 1 + 2 log2(r) rounds.
Convergent rational_convergent(const BigRat& g, const BigInt& r);

// Reduced fraction x/y with |gamma y - x| < 1/r and y <= 2r, obtained by
// sampling gamma to accuracy 1/(16 r^2) and approximating the sample.
std::pair<BigInt, BigInt> real_convergent(const RealValue& gamma, const BigInt& r);

// 2x2 integer matrix of determinant 1 acting on x+yi as
// (a11 x + a12 y) + (a21 x + a22 y) i.
struct GridTransform {
    BigInt a11{1}, a12{0}, a21{0}, a22{1};

    static GridTransform identity() { return {}; }
    static GridTransform rot90() { return {BigInt(0), BigInt(-1), BigInt(1), BigInt(0)}; }

    BigInt det() const { return a11 * a22 - a12 * a21; }
    GridTransform inverse() const { return {a22, -a12, -a21, a11}; } // det == 1
    // composition: (a * b)(z) = a(b(z))
    GridTransform operator*(const GridTransform& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    bool operator==(const GridTransform& o) const {
        return a11 == o.a11 && a12 == o.a12 && a21 == o.a21 && a22 == o.a22;
    }

    GaussianInt apply(const GaussianInt& z) const {
        return {a11 * z.re + a12 * z.im, a21 * z.re + a22 * z.im};
    }
    IPoint apply(const IPoint& z) const {
        return {z.re * BigRat(a11) + z.im * BigRat(a12), z.re * BigRat(a21) + z.im * BigRat(a22)};
    }
};

// mu * (a + bi) with mu > 0 and gcd(a, b) = 1.
struct QuasiRational {
    Interval mu;
    BigInt a;
    BigInt b;
};

using IPointFn = std::function<IPoint(int)>;

// Lemma-style alignment: tau q = mu i, |Im(tau r)| < |Re(tau r)| for r
// orthogonal to q; built as a shear times [[b,-a],[u,v]] with ua + vb = 1.
GridTransform orthogonal_align(const QuasiRational& q, const IPointFn& r_refine, int p0, int cap);
// convenience overload for a fixed interval point
GridTransform orthogonal_align(const QuasiRational& q, const IPoint& r, int p0, int cap);

struct VerticalBand {
    Interval left;
    Interval right;
    BigRat outer_width() const { return right.hi - left.lo; }
};

struct MeniscusAdjustment {
    GridTransform tau;
    VerticalBand band;
};

// Horizontal extent of tau(M): corner images plus the arc extreme directions
// when they lie on the meniscus arc (included conservatively on straddle).
VerticalBand band_of(const Meniscus& m, const GridTransform& tau, int p);

// Unimodular squeeze of the meniscus into a vertical band of width
// O(eps^{3/2}); near-axis bases short-circuit to the identity / 90-degree
// rotation.
MeniscusAdjustment adjust_meniscus(const Meniscus& m);

} // namespace pauliv
