#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pauliv/errors.hpp"
#include "pauliv/gaussian.hpp"
#include "pauliv/interval.hpp"
#include "pauliv/real.hpp"

#include <random>

using namespace pauliv;

TEST_CASE("gaussian multiplication") {
    GaussianInt one{1, 0};
    GaussianInt z{-7, 13};
    CHECK(gaussian_mul(one, z) == z);

    GaussianInt a{2, 1}, b{2, -1};
    CHECK(gaussian_mul(a, b) == GaussianInt{5, 0});

    GaussianInt c{1, 2}, d{3, 4};
    CHECK(gaussian_mul(c, d).norm() == 125);
    CHECK(c.norm() * d.norm() == 125);
}

TEST_CASE("gaussian norm is multiplicative") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        GaussianInt z{dist(rng), dist(rng)};
        GaussianInt w{dist(rng), dist(rng)};
        CHECK((z * w).norm() == z.norm() * w.norm());
        CHECK(z.conj().conj() == z);
        CHECK(z.norm() >= 0);
    }
}

TEST_CASE("interval_eval basics") {
    RealValue third = RealValue::from_rational(BigRat(1, 3));
    Interval iv = third.interval_at(3);
    CHECK(iv.contains(BigRat(1, 3)));
    CHECK(iv.width() <= BigRat(1, 1000));

    RealValue pi = RealValue::pi();
    Interval pv = pi.interval_at(6);
    CHECK(pv.width() <= BigRat(1, 1000000));
    CHECK(pv.contains(BigRat(3141592653589793LL, 1000000000000000LL)));
    CHECK(pv.lo <= BigRat(31415927, 10000000));
    CHECK(pv.hi >= BigRat(31415926, 10000000));

    RealValue zero = RealValue::from_rational(BigRat(0));
    for (int p : {1, 5, 20}) CHECK(zero.interval_at(p).contains(BigRat(0)));
}

TEST_CASE("digit oracle partial sums") {
    RealValue third = RealValue::from_rational(BigRat(1, 3));
    CHECK(third.partial_sum(0) == 0);
    CHECK(third.partial_sum(1) == BigRat(3, 10));
    CHECK(third.partial_sum(5) == BigRat(33333, 100000));

    // successive sums differ by a digit in 0..9 at the new place
    RealValue pi = RealValue::pi();
    for (int m = 1; m <= 12; ++m) {
        BigRat diff = pi.partial_sum(m) - pi.partial_sum(m - 1);
        BigRat scaled = diff * BigRat(pow10(static_cast<unsigned>(m)), 1);
        BigInt d = numerator(scaled);
        CHECK(denominator(scaled) == 1);
        CHECK(d >= 0);
        CHECK(d <= 9);
    }
    // negative values: x = d0 + 0.d1 d2 ... with d0 = floor(x)
    RealValue neg = RealValue::from_rational(BigRat(-1, 2));
    CHECK(neg.partial_sum(0) == -1);
    CHECK(neg.partial_sum(1) == BigRat(-1, 2));
}

TEST_CASE("monotone refinement") {
    for (const RealValue& x : {RealValue::pi(), RealValue::from_rational(BigRat(22, 7))}) {
        for (int p = 2; p < 30; p += 3) {
            BigRat w1 = x.interval_at(p + 1).width();
            BigRat w0 = x.interval_at(p).width();
            CHECK(w1 <= w0 + BigRat(2, pow10(static_cast<unsigned>(p + 1))));
        }
    }
}

TEST_CASE("compare_strict") {
    auto c = [](BigRat v) { return IntervalFn([v](int) { return Interval(v); }); };
    CHECK(compare_strict(c(BigRat(1)), c(BigRat(2)), 4, 64) == Cmp::Less);

    RealValue a = RealValue::from_rational(parse_decimal("0.999999"));
    RealValue b = RealValue::from_rational(BigRat(1));
    CHECK(compare_strict(a.enclosure_fn(), b.enclosure_fn(), 8, 64) == Cmp::Less);

    // identical digit streams never separate
    RealValue x = RealValue::pi();
    CHECK(compare_strict(x.enclosure_fn(), x.enclosure_fn(), 4, 128) == Cmp::Undecided);
}

TEST_CASE("interval arithmetic soundness on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 9999);
    for (int i = 0; i < 1000; ++i) {
        BigRat a(num(rng), den(rng));
        BigRat b(num(rng), den(rng));
        int p = 3 + static_cast<int>(rng() % 20);
        Interval ia = RealValue::from_rational(a).interval_at(p);
        Interval ib = RealValue::from_rational(b).interval_at(p);
        CHECK((ia + ib).contains(a + b));
        CHECK((ia - ib).contains(a - b));
        CHECK((ia * ib).contains(a * b));
        if (!ib.contains_zero()) CHECK((ia / ib).contains(a / b));
    }
}

TEST_CASE("sqrt and trig enclosures") {
    // sqrt: enclosure brackets the true root
    for (long v : {2L, 5L, 199L, 123456L}) {
        Interval r = sqrt_interval(Interval(BigRat(v)), 30);
        CHECK(r.lo * r.lo <= v);
        CHECK(r.hi * r.hi >= v);
        CHECK(r.width() <= BigRat(1, pow10(28)));
    }
    Interval pi = pi_interval(40);
    Interval s = sin_interval(pi * BigRat(1, 6), 30);
    CHECK(s.contains(BigRat(1, 2)));
    Interval c = cos_interval(pi * BigRat(1, 3), 30);
    CHECK(c.contains(BigRat(1, 2)));
    Interval at = atan_interval(Interval(BigRat(1)), 30);
    CHECK((at * BigRat(4)).contains(pi.mid()));
    // identity: sin^2 + cos^2 = 1 on scattered arguments
    for (int k = -3; k <= 8; ++k) {
        Interval x(BigRat(k, 3));
        Interval ss = sin_interval(x, 25);
        Interval cc = cos_interval(x, 25);
        CHECK((ss * ss + cc * cc).contains(BigRat(1)));
    }
    // large argument reduction
    Interval big(BigRat(1000001));
    Interval sb = sin_interval(big, 20);
    CHECK(sb.lo >= -1);
    CHECK(sb.hi <= 1);
    CHECK(sb.width() <= BigRat(1, pow10(18)));
}

TEST_CASE("numeric literal grammar") {
    CHECK(parse_decimal("1e-4") == BigRat(1, 10000));
    CHECK(parse_decimal("-0.25") == BigRat(-1, 4));
    CHECK(parse_decimal("2.5e2") == 250);
    CHECK(parse_decimal("3/7") == BigRat(3, 7));
    CHECK(parse_decimal("+12") == 12);
    CHECK_THROWS_AS(parse_decimal("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("1e"), std::invalid_argument);

    Interval half_pi = RealValue::parse("1/2*pi").interval_at(10);
    CHECK(half_pi.contains(BigRat(15707963267LL, 10000000000LL)) );
    Interval mp = RealValue::parse("-pi").interval_at(10);
    CHECK(mp.hi < 0);
}

TEST_CASE("digit extraction fails cleanly on grid-point enclosures") {
    RealValue half = RealValue::from_enclosures(
        [](int p) {
            BigRat r(1, 2 * pow10(static_cast<unsigned>(p)));
            return Interval(BigRat(1, 2) - r, BigRat(1, 2) + r);
        },
        "exact-half");
    CHECK_THROWS_AS(half.partial_sum(1), oracle_unavailable);
}
