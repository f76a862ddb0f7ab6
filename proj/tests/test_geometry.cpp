#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pauliv/meniscus.hpp"
#include "pauliv/number_theory.hpp"
#include "pauliv/oracles.hpp"

#include <random>

using namespace pauliv;

namespace {

Meniscus make(const char* eps, const char* theta, int p = 24) {
    return Meniscus(RealValue::parse(eps), RealValue::parse(theta), p);
}

} // namespace

TEST_CASE("construction validates epsilon") {
    CHECK_THROWS_AS(make("1.5", "0"), std::domain_error);
    CHECK_THROWS_AS(make("0", "0"), std::domain_error);
    CHECK_THROWS_AS(make("-0.1", "0"), std::domain_error);
}

TEST_CASE("corners at eps=0.1, theta=0") {
    Meniscus m = make("0.1", "0");
    const MeniscusFrame& f = m.frame(30);
    // x-coordinate 1 - eps^2 = 0.99 exactly
    CHECK(f.corner_plus.re.contains(BigRat(99, 100)));
    // y-coordinate: the root of y^2 = 1 - 0.99^2 = 199/10000 (oracle: exact interval sqrt)
    Interval y = sqrt_interval(Interval(BigRat(199, 10000)), 30);
    CHECK(f.corner_plus.im.lo <= y.hi);
    CHECK(f.corner_plus.im.hi >= y.lo);
    // frozen leading digits of sqrt(0.0199) = 0.14106735979...
    CHECK(f.corner_plus.im.lo >= BigRat(14106735979LL, 100000000000LL));
    CHECK(f.corner_plus.im.hi <= BigRat(14106735980LL, 100000000000LL));
    // symmetry about the real axis: corner_minus is the conjugate
    CHECK(f.corner_minus.re.contains(BigRat(99, 100)));
    CHECK((f.corner_minus.im + f.corner_plus.im).contains(BigRat(0)));
}

TEST_CASE("handle length is exactly eps^2") {
    for (const char* theta : {"0", "1", "2.5", "1/3*pi"}) {
        Meniscus m = make("0.1", theta);
        const MeniscusFrame& f = m.frame(40);
        IPoint handle = f.center - f.base_mid;
        Interval len2 = handle.norm2();
        CHECK(len2.contains(BigRat(1, 10000))); // (eps^2)^2 = 1e-4
        CHECK(len2.width() < BigRat(1, pow10(20)));
    }
}

TEST_CASE("metric data tracks the small-eps asymptotics") {
    Meniscus m = make("0.001", "0.8");
    MeniscusMetrics met = meniscus_metrics(m, 30);
    BigRat eps(1, 1000);
    Interval sqrt2 = sqrt_interval(Interval(BigRat(2)), 30);
    // ratios within relative 10*eps of the leading term
    auto ratio_close = [&](const Interval& value, const Interval& lead) {
        Interval r = value / lead;
        CHECK(r.hi >= 1 - 10 * eps);
        CHECK(r.lo <= 1 + 10 * eps);
    };
    ratio_close(met.base_len, sqrt2 * (eps * 2));
    ratio_close(met.arc_len, sqrt2 * (eps * 2));
    ratio_close(met.median_len, Interval(eps * eps * 2));
    ratio_close(met.side_len, sqrt2 * eps);

    // exact base for eps=0.1, theta=0: 2 * sqrt(199/10000)
    Meniscus m2 = make("0.1", "0");
    MeniscusMetrics met2 = meniscus_metrics(m2, 30);
    Interval y = sqrt_interval(Interval(BigRat(199, 10000)), 30);
    CHECK(met2.base_len.lo <= 2 * y.hi);
    CHECK(met2.base_len.hi >= 2 * y.lo);
}

TEST_CASE("membership basics") {
    Meniscus m = make("0.1", "0");
    // u = 1 (lattice point on the circle)
    CHECK(m.contains_scaled({1, 0}, 0));
    // u = 0.9899 < 1 - eps^2: outside
    RealValue x = RealValue::from_rational(BigRat(9899, 10000));
    CHECK_FALSE(m.contains_point(x.enclosure_fn(), RealValue::from_int(0).enclosure_fn()));
    // the center e^{-i theta/2} is inside for every eps (its alignment is exactly 1)
    for (const char* theta : {"0", "2", "5.9"}) {
        for (const char* eps : {"0.5", "0.01", "1e-4"}) {
            Meniscus mm = make(eps, theta);
            auto re = [&mm](int p) { return mm.frame(p).center.re; };
            auto im = [&mm](int p) { return mm.frame(p).center.im; };
            CHECK(mm.contains_point(re, im, /*unit_norm_known=*/true));
        }
    }
}

TEST_CASE("trace distance examples") {
    // identical operators
    Interval td = trace_distance({1, 0}, {0, 0}, 0, RealValue::parse("0"), 40);
    CHECK(td.lo == 0);
    CHECK(td.hi < BigRat(1, pow10(15)));
    // identity vs Rz(pi): distance 1
    Interval td2 = trace_distance({1, 0}, {0, 0}, 0, RealValue::parse("1*pi"), 40);
    CHECK(td2.contains(BigRat(1)));
    CHECK(td2.width() < BigRat(1, pow10(10)));
    // the diagonal generator is a z-rotation by -2*arctan(2)
    RealValue theta = RealValue::from_enclosures(
        [](int p) { return (atan_interval(Interval(BigRat(2)), p + 4) * BigRat(-2)).round_out(p); },
        "-2*arctan(2)");
    Interval td3 = trace_distance({1, 2}, {0, 0}, 1, theta, 40);
    CHECK(td3.lo == 0);
    CHECK(td3.hi < BigRat(1, pow10(15)));
    // norm-equation violation
    CHECK_THROWS_AS(trace_distance({1, 1}, {0, 0}, 0, RealValue::parse("0"), 20), std::domain_error);
}

TEST_CASE("canonical representative sign flip") {
    RealValue zero = RealValue::parse("0");
    auto [a, ok_a] = canonical_candidate({5, 3}, 0, zero, 8, 64);
    CHECK(ok_a);
    CHECK(a == GaussianInt{5, 3});
    auto [b, ok_b] = canonical_candidate({-1, 0}, 0, zero, 8, 64);
    CHECK(ok_b);
    CHECK(b == GaussianInt{1, 0});
    // u = i, theta = pi: alignment Re(i*e^{i pi/2}) = -1 < 0, flip to -i
    auto [c, ok_c] = canonical_candidate({0, 1}, 0, RealValue::parse("1*pi"), 8, 64);
    CHECK(ok_c);
    CHECK(c == GaussianInt{0, -1});
}

TEST_CASE("membership agrees with verified trace distance") {
    // random exact unitaries vs random angles: td < eps iff the canonical
    // representative lies in the region, whenever both sides are decided
    std::mt19937_64 seed(11);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        unsigned t = seed() % 5;
        BigInt f5 = five_pow(t);
        BigInt r = isqrt_floor(f5);
        long span = r.convert_to<long>();
        std::uniform_int_distribution<long> comp(-span, span);
        GaussianInt g{comp(seed), comp(seed)};
        BigInt rem = f5 - g.norm();
        if (rem < 0) continue;
        auto w = s2s_exhaustive(rem);
        if (!w) continue;
        GaussianInt v{w->first, w->second};
        BigRat theta_r(static_cast<long>(seed() % 6283), 1000);
        RealValue theta = RealValue::from_rational(theta_r);
        RealValue eps = RealValue::from_rational(BigRat(1 + static_cast<long>(seed() % 400), 1000));
        Meniscus m(eps, theta, 24);

        auto td_fn = [&](int p) { return trace_distance(g, v, t, theta, p); };
        Cmp cmp = compare_strict(td_fn, eps.enclosure_fn(), 16, 256);
        if (cmp == Cmp::Undecided) continue;
        auto [canon, decided] = canonical_candidate(g, t, theta, 16, 256);
        if (!decided) continue;
        bool inside = m.contains_scaled(canon, t);
        CHECK(inside == (cmp == Cmp::Less));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("rotation equivariance of membership") {
    // membership of g at angle theta equals membership of the rotated point at
    // angle 0; rotate exactly on lattice points via multiples of i when
    // theta/2 is a quarter turn: theta = -pi uses u -> u * i
    Meniscus at_theta = make("0.3", "-1*pi");
    Meniscus at_zero = make("0.3", "0");
    std::mt19937_64 seed(5);
    std::uniform_int_distribution<long> comp(-25, 25);
    for (int i = 0; i < 500; ++i) {
        unsigned t = 4;
        GaussianInt g{comp(seed), comp(seed)};
        // e^{i theta/2} = e^{-i pi/2} = -i: u e^{i theta/2} = (g.im, -g.re)... times -i
        GaussianInt rotated{g.im, -g.re};
        CHECK(at_theta.contains_scaled(g, t) == at_zero.contains_scaled(rotated, t));
    }
}
