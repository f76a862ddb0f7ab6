#include "pauliv/interval.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pauliv {

namespace {

// Greatest multiple of 10^-p that is <= sqrt(x), x >= 0.
BigRat sqrt_down_rat(const BigRat& x, int p) {
    if (x < 0) throw std::domain_error("sqrt of negative rational");
    BigInt scale = pow10(static_cast<unsigned>(p));
    BigInt m = floor_rat(x * scale * scale);
    return BigRat(isqrt_floor(m), scale);
}

// Least multiple of 10^-p that is >= sqrt(x).
BigRat sqrt_up_rat(const BigRat& x, int p) {
    if (x < 0) throw std::domain_error("sqrt of negative rational");
    BigInt scale = pow10(static_cast<unsigned>(p));
    BigInt m = ceil_rat(x * scale * scale);
    BigInt v = isqrt_floor(m);
    if (v * v < m) ++v;
    return BigRat(v, scale);
}

// Shrink a rational to denominator 10^q without leaving [x - 10^-q, x + 10^-q].
BigRat compress(const BigRat& x, int q) {
    BigInt scale = pow10(static_cast<unsigned>(q));
    return BigRat(round_rat(x * scale), scale);
}

constexpr int kSeriesGuard = 10;     // extra digits carried through the series
const BigInt kSeriesSlackUlps = 1000000; // covers truncation drift + tail, by a wide margin

// Fixed-point alternating series for sin(c), |c| <= 4. Returns an enclosure of
// width <= ~10^-(p+3). All arithmetic is integer over the grid 10^-(p+guard);
// per-iteration truncation drift is <= a few ulps and the loop runs a few
// hundred iterations at most, so the blanket slack is safe by orders of
// magnitude (asserted below).
Interval sin_small(const BigRat& c, int p) {
    int q = p + kSeriesGuard;
    BigInt B = pow10(static_cast<unsigned>(q));
    BigInt n = round_rat(c * B);
    BigInt n2 = n * n;
    BigInt B2 = B * B;
    BigInt term = n;
    BigInt sum = n;
    for (long j = 0; term != 0; ++j) {
        if (j > 20000) throw std::runtime_error("sin series failed to converge");
        BigInt den = B2 * ((2 * j + 2) * (2 * j + 3));
        term = -(term * n2) / den;
        sum += term;
    }
    return Interval(BigRat(sum - kSeriesSlackUlps, B), BigRat(sum + kSeriesSlackUlps, B));
}

Interval cos_small(const BigRat& c, int p) {
    int q = p + kSeriesGuard;
    BigInt B = pow10(static_cast<unsigned>(q));
    BigInt n = round_rat(c * B);
    BigInt n2 = n * n;
    BigInt B2 = B * B;
    BigInt term = B;
    BigInt sum = B;
    for (long j = 0; term != 0; ++j) {
        if (j > 20000) throw std::runtime_error("cos series failed to converge");
        BigInt den = B2 * ((2 * j + 1) * (2 * j + 2));
        term = -(term * n2) / den;
        sum += term;
    }
    return Interval(BigRat(sum - kSeriesSlackUlps, B), BigRat(sum + kSeriesSlackUlps, B));
}

// arctan series for |c| <= 1/2.
Interval atan_small(const BigRat& c, int p) {
    int q = p + kSeriesGuard;
    BigInt B = pow10(static_cast<unsigned>(q));
    BigInt n = round_rat(c * B);
    BigInt n2 = n * n;
    BigInt B2 = B * B;
    BigInt u = n; // n^(2j+1) / B^(2j), truncated
    BigInt sum = n;
    for (long j = 1; ; ++j) {
        if (j > 20000) throw std::runtime_error("atan series failed to converge");
        u = -(u * n2) / B2;
        BigInt term = u / (2 * j + 1);
        if (term == 0) break;
        sum += term;
    }
    return Interval(BigRat(sum - kSeriesSlackUlps, B), BigRat(sum + kSeriesSlackUlps, B));
}

Interval widen(const Interval& v, const BigRat& r) { return {v.lo - r, v.hi + r}; }

} // namespace

Interval sqrt_interval(const Interval& a, int p) {
    if (a.hi < 0) throw std::domain_error("sqrt_interval: negative interval");
    BigRat lo = a.lo < 0 ? BigRat(0) : a.lo; // enclosures of nonnegative reals may dip below 0
    return {sqrt_down_rat(lo, p + 2), sqrt_up_rat(a.hi, p + 2)};
}

Interval pi_interval(int p) {
    static std::map<int, Interval> cache;
    static std::mutex mu;
    int bucket = ((p / 64) + 1) * 64;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(bucket);
        if (it != cache.end()) return it->second.round_out(p + 1);
    }
    // Machin: pi = 16*atan(1/5) - 4*atan(1/239)
    Interval a5 = atan_small(BigRat(1, 5), bucket + 8);
    Interval a239 = atan_small(BigRat(1, 239), bucket + 8);
    Interval pi = a5 * BigRat(16) - a239 * BigRat(4);
    pi = pi.round_out(bucket + 2);
    {
        std::lock_guard<std::mutex> lk(mu);
        cache[bucket] = pi;
    }
    return pi.round_out(p + 1);
}

namespace {

// Reduce the argument interval by a multiple of 2*pi until its midpoint has
// magnitude <= 4. Sound: sin/cos are 2*pi periodic and the multiple is exact.
Interval reduce_period(const Interval& a, int p) {
    Interval cur = a;
    for (int pass = 0; pass < 64; ++pass) {
        BigRat m = cur.mid();
        if (m >= -4 && m <= 4) return cur;
        Interval two_pi = pi_interval(20) * BigRat(2);
        BigInt k = round_rat(m / two_pi.mid());
        if (k == 0) return cur;
        int extra = static_cast<int>(decimal_digits(k)) + 6;
        cur = cur - pi_interval(p + extra) * BigRat(2 * k);
    }
    throw std::runtime_error("period reduction failed");
}

} // namespace

Interval sin_interval(const Interval& a, int p) {
    Interval r = reduce_period(a, p);
    BigRat c = compress(r.mid(), p + 6);
    BigRat rad = r.hi - c > c - r.lo ? r.hi - c : c - r.lo;
    Interval v = widen(sin_small(c, p + 3), rad); // |sin'| <= 1
    return v.meet(Interval(BigRat(-1), BigRat(1))).round_out(p + 1);
}

Interval cos_interval(const Interval& a, int p) {
    Interval r = reduce_period(a, p);
    BigRat c = compress(r.mid(), p + 6);
    BigRat rad = r.hi - c > c - r.lo ? r.hi - c : c - r.lo;
    Interval v = widen(cos_small(c, p + 3), rad); // |cos'| <= 1
    return v.meet(Interval(BigRat(-1), BigRat(1))).round_out(p + 1);
}

Interval atan_interval(const Interval& a, int p) {
    Interval abs = abs_interval(a);
    if (abs.hi <= BigRat(1, 2)) {
        BigRat c = compress(a.mid(), p + 6);
        BigRat rad = a.hi - c > c - a.lo ? a.hi - c : c - a.lo;
        return widen(atan_small(c, p + 3), rad).round_out(p + 1); // |atan'| <= 1
    }
    // atan(x) = 2*atan(x / (1 + sqrt(1 + x^2))), argument shrinks by > 2x
    Interval root = sqrt_interval(Interval(BigRat(1)) + a * a, p + 6);
    Interval u = a / (Interval(BigRat(1)) + root);
    return (atan_interval(u, p + 2) * BigRat(2)).round_out(p + 1);
}

Interval sqrt5_pow(unsigned t, int p) {
    if (t % 2 == 0) return Interval(BigRat(five_pow(t / 2)));
    BigInt base = five_pow((t - 1) / 2);
    int extra = static_cast<int>(decimal_digits(base)) + 2;
    return sqrt_interval(Interval(BigRat(5)), p + extra) * BigRat(base);
}

Cmp compare_strict(const IntervalFn& a, const IntervalFn& b, int p0, int max_precision) {
    int p = p0 < 1 ? 1 : p0;
    for (;;) {
        Interval A = a(p);
        Interval B = b(p);
        if (A.hi < B.lo) return Cmp::Less;
        if (A.lo > B.hi) return Cmp::Greater;
        if (p >= max_precision) return Cmp::Undecided;
        p = p * 2 > max_precision ? max_precision : p * 2;
    }
}

std::string rat_to_decimal_string(const BigRat& x, int sig, bool round_up) {
    if (x == 0) return "0";
    BigRat ax = x < 0 ? -x : x;
    // exponent e with |x| in [10^e, 10^(e+1))
    int e = 0;
    if (ax >= 1) {
        BigRat v = ax;
        while (v >= 10) { v /= 10; ++e; }
    } else {
        BigRat v = ax;
        while (v < 1) { v *= 10; --e; }
    }
    int shift = sig - 1 - e;
    BigRat scaled = shift >= 0 ? x * BigRat(pow10(static_cast<unsigned>(shift)), 1)
                               : x / BigRat(pow10(static_cast<unsigned>(-shift)), 1);
    BigInt n = round_up ? ceil_rat(scaled) : floor_rat(scaled);
    BigInt an = n < 0 ? BigInt(-n) : n;
    std::string digits = an.str();
    if (static_cast<int>(digits.size()) > sig) { // rounding overflowed a digit
        ++e;
        digits.resize(static_cast<size_t>(sig));
    }
    while (static_cast<int>(digits.size()) < sig) digits += "0";
    std::string mant = digits.substr(0, 1);
    std::string frac = digits.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (n < 0 ? "-" : "");
    out += mant;
    if (!frac.empty()) out += "." + frac;
    if (e != 0) out += "e" + std::to_string(e);
    return out;
}

} // namespace pauliv
