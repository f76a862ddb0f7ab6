#include "pauliv/diophantine.hpp"

#include "pauliv/errors.hpp"

#include <stdexcept>

namespace pauliv {

Convergent rational_convergent(const BigRat& g, const BigInt& r) {
    if (r < 1) throw std::invalid_argument("rational_convergent: r must be >= 1");
    BigRat inv_r(1, r);
    BigRat gamma = g;
    BigInt a = floor_rat(gamma);
    BigInt p_prev = 1, q_prev = 0; // p_{-1}, q_{-1}
    BigInt p_cur = a, q_cur = 1;
    int k = 0;
    for (;;) {
        BigRat frac = gamma - BigRat(a);
        // early exit: here |g q_k - p_k| = 1/(gamma_{k+1} q_k + q_{k-1}) < 1/r
        if (frac < inv_r) return {p_cur, q_cur, k};
        gamma = BigRat(1) / frac;
        a = floor_rat(gamma);
        BigInt q_next = a * q_cur + q_prev;
        // Khinchin exit: q_k <= r < q_{k+1}
        if (q_next > r) return {p_cur, q_cur, k};
        BigInt p_next = a * p_cur + p_prev;
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
        ++k;
    }
}

std::pair<BigInt, BigInt> real_convergent(const RealValue& gamma, const BigInt& r) {
    if (r < 1) throw std::invalid_argument("real_convergent: r must be >= 1");
    // sample accuracy 1/(16 r^2); together with the 2r approximation bound this
    // gives |gamma y - x| <= 2r/(32 r^2) + 1/(2r) < 1/r
    int m = static_cast<int>(decimal_digits(16 * r * r));
    Interval iv = gamma.interval_at(m);
    Convergent c = rational_convergent(iv.mid(), 2 * r);
    return {c.p, c.q};
}

GridTransform orthogonal_align(const QuasiRational& q, const IPointFn& r_refine, int p0, int cap) {
    const BigInt& a = q.a;
    const BigInt& b = q.b;
    if (a == 0 && b == 0) throw std::domain_error("orthogonal_align: q must be nonzero");
    if (!(q.mu.lo > 0)) throw std::domain_error("orthogonal_align: mu must be positive");
    BigInt u0, v0;
    BigInt g = ext_gcd(a, b, u0, v0);
    if (g != 1) throw std::domain_error("orthogonal_align: a, b must be coprime");
    // canonical Bezout pair: 0 <= u < |b| when b != 0
    BigInt u, v;
    if (b != 0) {
        BigInt ab = abs(b);
        u = ((u0 % ab) + ab) % ab;
        v = (1 - u * a) / b;
    } else {
        u = a; // a = +-1
        v = 0;
    }
    GridTransform tau0{b, -a, u, v};
    if (tau0.det() != 1) throw std::domain_error("orthogonal_align: internal Bezout failure");

    int p = p0 < 4 ? 4 : p0;
    for (;;) {
        IPoint r = r_refine(p);
        IPoint tr = tau0.apply(r);
        const Interval& alpha = tr.re;
        const Interval& beta = tr.im;
        if (!alpha.contains_zero()) {
            Interval aa = abs_interval(alpha);
            Interval ab_ = abs_interval(beta);
            if (definitely_less(ab_, aa)) return tau0;
            Interval ratio = -beta / alpha;
            BigInt klo = ceil_rat(ratio.lo);
            BigInt khi = ceil_rat(ratio.hi);
            if (klo == khi || p >= cap) {
                GridTransform shear{BigInt(1), BigInt(0), klo, BigInt(1)};
                return shear * tau0;
            }
        } else if (p >= cap) {
            throw std::domain_error("orthogonal_align: r appears collinear with q");
        }
        p = p * 2 > cap ? cap : p * 2;
    }
}

GridTransform orthogonal_align(const QuasiRational& q, const IPoint& r, int p0, int cap) {
    return orthogonal_align(q, [&r](int) { return r; }, p0, cap);
}

VerticalBand band_of(const Meniscus& m, const GridTransform& tau, int p) {
    const MeniscusFrame& f = m.frame(p);
    Interval x1 = tau.apply(f.corner_plus).re;
    Interval x2 = tau.apply(f.corner_minus).re;
    Interval left{x1.lo < x2.lo ? x1.lo : x2.lo, x1.hi < x2.hi ? x1.hi : x2.hi};
    Interval right{x1.lo > x2.lo ? x1.lo : x2.lo, x1.hi > x2.hi ? x1.hi : x2.hi};
    // Arc extreme of Re over tau(unit circle) is +-|d| for d = (a11, a12),
    // attained at u* = +-d/|d|; it belongs to the meniscus arc iff
    // <u*, center> >= w.
    Interval d2 = Interval(BigRat(tau.a11)) * BigRat(tau.a11) + Interval(BigRat(tau.a12)) * BigRat(tau.a12);
    Interval dlen = sqrt_interval(d2, p + 4);
    Interval proj = f.center.re * BigRat(tau.a11) + f.center.im * BigRat(tau.a12); // <d, center>
    Interval wd = f.w * dlen;
    // include unless certainly off the arc
    if (!(proj.hi < wd.lo)) right = Interval::hull(right, dlen);
    if (!((-proj).hi < wd.lo)) left = Interval::hull(left, -dlen);
    return {left, right};
}

namespace {

// True epsilon lies in f.eps; upper bound of eps^{3/2} as threshold scale.
Interval eps_three_halves(const MeniscusFrame& f, int p) {
    return sqrt_interval(f.eps * f.eps * f.eps, p + 4);
}

struct BaseGeometry {
    bool swap = false;   // worked on J-rotated meniscus
    bool negate = false; // base vector negated so Re > 0
};

// base vector of the working (possibly J-rotated) meniscus at precision p
IPoint working_base(const Meniscus& m, const BaseGeometry& geo, int p) {
    const MeniscusFrame& f = m.frame(p);
    IPoint r = f.corner_plus - f.corner_minus;
    if (geo.swap) r = GridTransform::rot90().apply(r);
    if (geo.negate) r = -r;
    return r;
}

IPoint working_corner(const Meniscus& m, bool swap, bool plus, int p) {
    const MeniscusFrame& f = m.frame(p);
    IPoint c = plus ? f.corner_plus : f.corner_minus;
    if (swap) c = GridTransform::rot90().apply(c);
    return c;
}

} // namespace

MeniscusAdjustment adjust_meniscus(const Meniscus& m) {
    const int cap = m.precision_cap();
    int p = m.precision() + m.eps_digits() * 2;
    if (p > cap) p = cap;

    // Decide the coarse shape of the base vector.
    BaseGeometry geo;
    bool use_identity = false, use_rot = false;
    for (;;) {
        const MeniscusFrame& f = m.frame(p);
        Interval e32 = eps_three_halves(f, p);
        IPoint r = f.corner_plus - f.corner_minus;
        Interval aa = abs_interval(r.re);
        Interval ab = abs_interval(r.im);
        if (aa.hi <= e32.lo) { use_identity = true; break; }
        if (ab.hi <= e32.lo) { use_rot = true; break; }
        bool a_sign = !r.re.contains_zero();
        bool b_sign = !r.im.contains_zero();
        if (a_sign && b_sign) {
            geo.swap = definitely_less(aa, ab);
            IPoint wr = geo.swap ? GridTransform::rot90().apply(r) : r;
            geo.negate = wr.re.hi < 0;
            break;
        }
        if (p >= cap) {
            // base is numerically on an axis; the cheap transforms suffice
            if (!a_sign) use_identity = true;
            else use_rot = true;
            break;
        }
        p = p * 2 > cap ? cap : p * 2;
    }

    if (use_identity) {
        GridTransform tau = GridTransform::identity();
        return {tau, band_of(m, tau, p)};
    }
    if (use_rot) {
        GridTransform tau = GridTransform::rot90();
        return {tau, band_of(m, tau, p)};
    }

    // gamma = Im/Re of the working base vector (|gamma| <= 1 up to rounding)
    Meniscus const* mp = &m;
    BaseGeometry geo_c = geo;
    RealValue gamma = RealValue::from_enclosures(
        [mp, geo_c](int prec) {
            int q = prec + 8;
            for (;;) {
                IPoint r = working_base(*mp, geo_c, q);
                if (!r.re.contains_zero()) {
                    Interval val = r.im / r.re;
                    if (val.width() <= BigRat(1, pow10(static_cast<unsigned>(prec)))) return val;
                }
                q *= 2;
                if (q > (1 << 14))
                    throw oracle_unavailable("base slope enclosure failed to converge");
            }
        },
        "base-slope");

    const MeniscusFrame& f0 = m.frame(p);
    Interval inv_sqrt_eps = Interval(BigRat(1)) / sqrt_interval(f0.eps, p + 4);
    BigInt n = ceil_rat(inv_sqrt_eps.hi);
    if (n < 1) n = 1;
    auto [b, a] = real_convergent(gamma, n);

    // Enlarged meniscus L with base parallel to a+bi touching a corner; pick
    // the corner whose L contains M (verified on the other corner), z1 on ties.
    GaussianInt d{a, b};
    BigRat d2(a * a + b * b);
    auto chord_mid = [&](const IPoint& touch) {
        Interval s = dot(touch, IPoint(Interval(BigRat(d.re)), Interval(BigRat(d.im)))) * (BigRat(1) / d2);
        return touch - IPoint(s * BigRat(d.re), s * BigRat(d.im));
    };
    bool touch_plus = true;
    {
        int pp = p;
        for (;;) {
            IPoint cp = working_corner(m, geo.swap, true, pp);
            IPoint cm = working_corner(m, geo.swap, false, pp);
            IPoint mid_p = chord_mid(cp);
            IPoint mid_m = chord_mid(cm);
            bool ok_p = dot(cm, mid_p).lo >= mid_p.norm2().hi;
            bool ok_m = dot(cp, mid_m).lo >= mid_m.norm2().hi;
            if (ok_p) { touch_plus = true; break; }
            if (ok_m) { touch_plus = false; break; }
            if (pp >= cap) { touch_plus = true; break; } // tie: prefer z1
            pp = pp * 2 > cap ? cap : pp * 2;
        }
    }

    bool swap = geo.swap;
    bool tp = touch_plus;
    IPointFn handle_refine = [mp, swap, tp, d, d2](int prec) {
        int q = prec + 8;
        IPoint touch = working_corner(*mp, swap, tp, q);
        Interval s = dot(touch, IPoint(Interval(BigRat(d.re)), Interval(BigRat(d.im)))) * (BigRat(1) / d2);
        IPoint mid = touch - IPoint(s * BigRat(d.re), s * BigRat(d.im));
        Interval len = sqrt_interval(mid.norm2(), q + 4);
        Interval factor = (Interval(BigRat(1)) - len) / len;
        return mid.scale(factor);
    };

    Interval alpha = working_base(m, geo, p).re;
    QuasiRational q{alpha / Interval(BigRat(a)), a, b};
    GridTransform tau_main = orthogonal_align(q, handle_refine, p, cap);
    GridTransform tau = geo.swap ? tau_main * GridTransform::rot90() : tau_main;
    return {tau, band_of(m, tau, p)};
}

} // namespace pauliv
