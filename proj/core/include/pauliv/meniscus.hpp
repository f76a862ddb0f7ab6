#pragma once

#include "pauliv/gaussian.hpp"
#include "pauliv/interval.hpp"
#include "pauliv/real.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace pauliv {

// Complex number with interval-valued coordinates.
struct IPoint {
    Interval re;
    Interval im;

    IPoint() = default;
    IPoint(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    IPoint operator+(const IPoint& o) const { return {re + o.re, im + o.im}; }
    IPoint operator-(const IPoint& o) const { return {re - o.re, im - o.im}; }
    IPoint operator-() const { return {-re, -im}; }
    // complex product
    IPoint cmul(const IPoint& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    IPoint scale(const Interval& s) const { return {re * s, im * s}; }
    IPoint scale(const BigRat& s) const { return {re * s, im * s}; }
    Interval norm2() const { return re * re + im * im; }
    IPoint round_out(int p) const { return {re.round_out(p), im.round_out(p)}; }
};

// vector dot product <a, b>
inline Interval dot(const IPoint& a, const IPoint& b) { return a.re * b.re + a.im * b.im; }

// Derived geometry of M_eps(theta) at one working precision.
struct MeniscusFrame {
    Interval eps;       // epsilon
    Interval eps2;      // epsilon^2
    Interval w;         // 1 - epsilon^2 (the base line offset)
    Interval y0;        // half base length: sqrt(1 - w^2)
    Interval cos_half;  // cos(theta/2)
    Interval sin_half;  // sin(theta/2)
    IPoint center;      // e^{-i theta/2}
    IPoint corner_plus; // (w + i y0) * center
    IPoint corner_minus;
    IPoint base_mid;    // w * center
    IPoint apex;        // center / w (tangent intersection)
};

// The region {u : 1 - eps^2 < Re(u e^{i theta/2}) <= 1, |u| <= 1}. Membership
// of exact lattice candidates g/sqrt(5^t) is decided with the exact norm test
// plus one strict interval comparison; comparisons that stay undecided at the
// precision cap count as non-membership.
class Meniscus {
public:
    Meniscus(RealValue epsilon, RealValue theta, int precision, int precision_cap = -1);

    const RealValue& epsilon() const { return epsilon_; }
    const RealValue& theta() const { return theta_; }
    int precision() const { return precision_; }
    int precision_cap() const { return cap_; }
    // ceil(log10(1/eps))
    int eps_digits() const { return eps_digits_; }

    const MeniscusFrame& frame(int p) const;

    // u = g / sqrt(5^t)
    bool contains_scaled(const GaussianInt& g, unsigned t) const;

    // Membership for an interval point; unit_norm_known skips the |u| <= 1
    // test (callers pass true when the point lies on the unit circle by
    // construction). Undecided comparisons yield false.
    bool contains_point(const IntervalFn& re_fn, const IntervalFn& im_fn,
                        bool unit_norm_known = false) const;

private:
    // certified double prefilter for the strict real-part test; decisions
    // inside the error margin fall back to exact intervals
    struct FastPath {
        double c = 0, s = 0, w5 = 0;
        double rad_c = 0, rad_s = 0, rad_w5 = 0;
    };
    const FastPath& fast_path(unsigned t) const;

    RealValue epsilon_;
    RealValue theta_;
    int precision_;
    int cap_;
    int eps_digits_;
    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<const MeniscusFrame>> frames_;
    mutable std::map<unsigned, FastPath> fast_;
};

inline Meniscus build_meniscus(const RealValue& eps, const RealValue& theta, int precision) {
    return Meniscus(eps, theta, precision);
}

struct MeniscusMetrics {
    Interval base_len;
    Interval arc_len;
    Interval median_len;
    Interval side_len;
    Interval area;
};

MeniscusMetrics meniscus_metrics(const Meniscus& m, int p);

// Enclosure of sqrt(1 - |Tr(U R†)|/2) for U = (1/sqrt(5^t)) [[u, -v*],[v, u*]]
// against R = R_z(theta); requires |u|^2 + |v|^2 = 5^t.
Interval trace_distance(const GaussianInt& u, const GaussianInt& v, unsigned t,
                        const RealValue& theta, int precision);

// u if Re(u e^{i theta/2}) >= 0, else -u; .second is false when the sign stayed
// undecided at the cap (caller re-verifies via trace_distance).
std::pair<GaussianInt, bool> canonical_candidate(const GaussianInt& g, unsigned t,
                                                 const RealValue& theta, int p0, int cap);

} // namespace pauliv
