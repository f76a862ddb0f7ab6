#pragma once

#include "pauliv/bigint.hpp"

#include <functional>
#include <stdexcept>

namespace pauliv {

// Closed interval with exact rational endpoints. Every operation returns an
// enclosure of the exact image; precision-taking operations guarantee width
// control by outward rounding to the 10^-p grid.
struct Interval {
    BigRat lo;
    BigRat hi;

    Interval() : lo(0), hi(0) {}
    Interval(BigRat v) : lo(v), hi(v) {}
    Interval(BigRat l, BigRat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    BigRat width() const { return hi - lo; }
    BigRat mid() const { return (lo + hi) / 2; }
    bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool is_point() const { return lo == hi; }

    Interval operator-() const { return {-hi, -lo}; }
    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
    Interval operator*(const Interval& o) const {
        BigRat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        BigRat mn = a, mx = a;
        for (const BigRat* v : {&b, &c, &d}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return {mn, mx};
    }
    // Division requires the divisor interval to exclude zero.
    Interval operator/(const Interval& o) const {
        if (o.contains_zero()) throw std::domain_error("Interval division by interval containing 0");
        return *this * Interval(BigRat(1) / o.hi, BigRat(1) / o.lo);
    }

    Interval operator+(const BigRat& r) const { return {lo + r, hi + r}; }
    Interval operator-(const BigRat& r) const { return {lo - r, hi - r}; }
    Interval operator*(const BigRat& r) const {
        return r >= 0 ? Interval{lo * r, hi * r} : Interval{hi * r, lo * r};
    }

    // Outward rounding to multiples of 10^-p.
    Interval round_out(int p) const {
        BigInt scale = pow10(static_cast<unsigned>(p));
        return {BigRat(floor_rat(lo * scale), scale), BigRat(ceil_rat(hi * scale), scale)};
    }

    // Intersection; caller asserts the true value lies in both.
    Interval meet(const Interval& o) const {
        BigRat l = lo > o.lo ? lo : o.lo;
        BigRat h = hi < o.hi ? hi : o.hi;
        if (l > h) throw std::domain_error("Interval::meet: empty intersection");
        return {l, h};
    }

    static Interval hull(const Interval& a, const Interval& b) {
        return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
    }
};

inline Interval abs_interval(const Interval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return {BigRat(0), a.hi > -a.lo ? a.hi : -a.lo};
}

inline bool definitely_less(const Interval& a, const Interval& b) { return a.hi < b.lo; }
inline bool definitely_leq(const Interval& a, const Interval& b) { return a.hi <= b.lo; }

// Enclosure of sqrt(x) for x >= 0, width <= 10^-p + input spread.
Interval sqrt_interval(const Interval& a, int p);

// Enclosure of pi, width <= 10^-p (Machin formula, cached per precision).
Interval pi_interval(int p);

// Enclosures of sin/cos/arctan over an interval argument; the result width is
// O(width(a) + 10^-p). Arguments of any size are accepted (period reduction
// for sin/cos, argument reduction for arctan).
Interval sin_interval(const Interval& a, int p);
Interval cos_interval(const Interval& a, int p);
Interval atan_interval(const Interval& a, int p);

// sqrt(5^t): exact for even t, enclosure at precision p for odd t.
Interval sqrt5_pow(unsigned t, int p);

enum class Cmp { Less, Greater, Undecided };

using IntervalFn = std::function<Interval(int)>;

// Decide a < b or a > b by evaluating enclosures at precisions p0, 2*p0, ...
// up to max_precision. Equal values stay Undecided at every precision.
Cmp compare_strict(const IntervalFn& a, const IntervalFn& b, int p0, int max_precision);

} // namespace pauliv
