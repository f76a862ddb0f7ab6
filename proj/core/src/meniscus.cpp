#include "pauliv/meniscus.hpp"

#include <cmath>
#include <stdexcept>

namespace pauliv {

namespace {
constexpr int kBootstrapCap = 4096;
}

Meniscus::Meniscus(RealValue epsilon, RealValue theta, int precision, int precision_cap)
    : epsilon_(std::move(epsilon)), theta_(std::move(theta)),
      precision_(precision < 4 ? 4 : precision) {
    // validate 0 < eps < 1
    auto eps_fn = epsilon_.enclosure_fn();
    auto const_fn = [](BigRat v) {
        return [v](int) { return Interval(v); };
    };
    if (compare_strict(const_fn(BigRat(0)), eps_fn, 8, kBootstrapCap) != Cmp::Less ||
        compare_strict(eps_fn, const_fn(BigRat(1)), 8, kBootstrapCap) != Cmp::Less)
        throw std::domain_error("epsilon must lie strictly inside (0,1)");

    int p = 8;
    Interval e = epsilon_.interval_at(p);
    while (e.lo <= 0) {
        p *= 2;
        e = epsilon_.interval_at(p);
    }
    eps_digits_ = ceil_log10_inverse(e.lo);
    cap_ = precision_cap > 0 ? precision_cap : 4 * eps_digits_ + 64;
    if (cap_ < precision_) cap_ = precision_;
}

const MeniscusFrame& Meniscus::frame(int p) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = frames_.find(p);
        if (it != frames_.end()) return *it->second;
    }
    int q = p + 8;
    auto f = std::make_shared<MeniscusFrame>();
    for (;;) {
        f->eps = epsilon_.interval_at(q);
        f->eps2 = (f->eps * f->eps).round_out(q);
        f->w = Interval(BigRat(1)) - f->eps2;
        if (f->w.lo > 0) break; // eps extremely close to 1: sharpen until w separates
        if (q >= cap_ + kBootstrapCap) throw std::domain_error("epsilon indistinguishable from 1");
        q *= 2;
    }
    // y0 = eps * sqrt(2 - eps^2), i.e. sqrt(1 - w^2) without cancellation
    f->y0 = (f->eps * sqrt_interval(Interval(BigRat(2)) - f->eps2, q)).round_out(q);
    Interval half = theta_.interval_at(q + 2) * BigRat(1, 2);
    f->cos_half = cos_interval(half, q);
    f->sin_half = sin_interval(half, q);
    f->center = IPoint(f->cos_half, -f->sin_half);
    // (w ± i y0) * (cos - i sin)
    f->corner_plus = IPoint((f->w * f->cos_half + f->y0 * f->sin_half).round_out(q),
                            (f->y0 * f->cos_half - f->w * f->sin_half).round_out(q));
    f->corner_minus = IPoint((f->w * f->cos_half - f->y0 * f->sin_half).round_out(q),
                             (-(f->y0 * f->cos_half) - f->w * f->sin_half).round_out(q));
    f->base_mid = f->center.scale(f->w).round_out(q);
    f->apex = IPoint((f->cos_half / f->w).round_out(q), (-f->sin_half / f->w).round_out(q));
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = frames_.emplace(p, std::move(f));
    (void)inserted;
    return *it->second;
}

namespace {

double to_double(const BigRat& x) { return x.convert_to<double>(); }

} // namespace

const Meniscus::FastPath& Meniscus::fast_path(unsigned t) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = fast_.find(t);
        if (it != fast_.end()) return it->second;
    }
    const MeniscusFrame& f = frame(40);
    Interval w5 = f.w * sqrt5_pow(t, 40);
    FastPath fp;
    auto set = [](const Interval& iv, double& mid, double& rad) {
        mid = to_double(iv.mid());
        // width plus slack for the rational-to-double conversions
        rad = to_double(iv.width()) + 1e-14 * (std::abs(mid) + 1.0);
    };
    set(f.cos_half, fp.c, fp.rad_c);
    set(f.sin_half, fp.s, fp.rad_s);
    set(w5, fp.w5, fp.rad_w5);
    std::lock_guard<std::mutex> lk(mu_);
    return fast_.emplace(t, fp).first->second;
}

bool Meniscus::contains_scaled(const GaussianInt& g, unsigned t) const {
    if (g.norm() > five_pow(t)) return false; // |u| <= 1, exact
    // Strict side: g.re cos - g.im sin > (1 - eps^2) sqrt(5^t);
    // Re(u e^{i theta/2}) <= 1 then follows from |u| <= 1.
    if (t <= 60) { // conversion error is relative and covered by the margin
        const FastPath& fp = fast_path(t);
        double gre = g.re.convert_to<double>();
        double gim = g.im.convert_to<double>();
        double val = gre * fp.c - gim * fp.s - fp.w5;
        double mag = std::abs(gre * fp.c) + std::abs(gim * fp.s) + std::abs(fp.w5);
        double margin = fp.rad_c * std::abs(gre) + fp.rad_s * std::abs(gim) + fp.rad_w5 +
                        1e-12 * (mag + 1.0);
        if (val > margin) return true;
        if (val < -margin) return false;
    }
    auto lhs = [this, &g](int p) {
        const MeniscusFrame& f = frame(p);
        return f.cos_half * BigRat(g.re) - f.sin_half * BigRat(g.im);
    };
    auto rhs = [this, t](int p) {
        const MeniscusFrame& f = frame(p);
        return f.w * sqrt5_pow(t, p);
    };
    return compare_strict(rhs, lhs, precision_, cap_) == Cmp::Less;
}

bool Meniscus::contains_point(const IntervalFn& re_fn, const IntervalFn& im_fn,
                              bool unit_norm_known) const {
    if (!unit_norm_known) {
        auto norm2 = [&](int p) {
            Interval r = re_fn(p), i = im_fn(p);
            return r * r + i * i;
        };
        auto one = [](int) { return Interval(BigRat(1)); };
        if (compare_strict(norm2, one, precision_, cap_) != Cmp::Less) return false;
    }
    auto lhs = [&, this](int p) {
        const MeniscusFrame& f = frame(p);
        return re_fn(p) * f.cos_half - im_fn(p) * f.sin_half;
    };
    auto rhs = [this](int p) { return frame(p).w; };
    return compare_strict(rhs, lhs, precision_, cap_) == Cmp::Less;
}

MeniscusMetrics meniscus_metrics(const Meniscus& m, int p) {
    const MeniscusFrame& f = m.frame(p + 4);
    MeniscusMetrics out;
    out.base_len = (f.y0 * BigRat(2)).round_out(p);
    Interval tan_x = f.y0 / f.w;
    Interval x = atan_interval(tan_x, p + 4);
    out.arc_len = (x * BigRat(2)).round_out(p);
    out.median_len = ((f.y0 * f.y0) / f.w).round_out(p);
    out.side_len = tan_x.round_out(p);
    out.area = (x - f.y0 * f.w).round_out(p);
    return out;
}

Interval trace_distance(const GaussianInt& u, const GaussianInt& v, unsigned t,
                        const RealValue& theta, int precision) {
    if (u.norm() + v.norm() != five_pow(t))
        throw std::domain_error("trace_distance: |u|^2 + |v|^2 != 5^t");
    int q = precision + 6;
    Interval half = theta.interval_at(q + 2) * BigRat(1, 2);
    Interval c = cos_interval(half, q);
    Interval s = sin_interval(half, q);
    Interval x = (c * BigRat(u.re) - s * BigRat(u.im)) / sqrt5_pow(t, q);
    Interval d = Interval(BigRat(1)) - abs_interval(x);
    // |Re(u e^{i theta/2})| <= |u| <= 1 exactly, so the true value lies in [0,1]
    d = d.meet(Interval(BigRat(0), BigRat(2)));
    return sqrt_interval(d, precision + 2).round_out(precision);
}

std::pair<GaussianInt, bool> canonical_candidate(const GaussianInt& g, unsigned t,
                                                 const RealValue& theta, int p0, int cap) {
    (void)t;
    auto lhs = [&theta, &g](int p) {
        int q = p + 4;
        Interval half = theta.interval_at(q + 2) * BigRat(1, 2);
        Interval c = cos_interval(half, q);
        Interval s = sin_interval(half, q);
        return c * BigRat(g.re) - s * BigRat(g.im);
    };
    auto zero = [](int) { return Interval(BigRat(0)); };
    Cmp cmp = compare_strict(lhs, zero, p0, cap);
    if (cmp == Cmp::Greater) return {g, true};
    if (cmp == Cmp::Less) return {-g, true};
    return {g, false};
}

} // namespace pauliv
