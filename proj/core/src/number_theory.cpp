#include "pauliv/number_theory.hpp"

#include "pauliv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace pauliv {

BigInt Rng::below(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("Rng::below: n must be >= 1");
    if (n == 1) return 0;
    unsigned bits = boost::multiprecision::msb(n) + 1;
    unsigned words = (bits + 63) / 64;
    for (;;) {
        BigInt x = 0;
        for (unsigned i = 0; i < words; ++i) x = (x << 64) | BigInt(next_u64());
        x >>= words * 64 - bits;
        if (x < n) return x;
    }
}

BigInt Rng::range(const BigInt& lo, const BigInt& hi) {
    if (hi < lo) throw std::invalid_argument("Rng::range: empty range");
    return lo + below(hi - lo + 1);
}

namespace {

const std::vector<long>& small_primes() {
    static const std::vector<long> primes = [] {
        std::vector<long> out;
        std::vector<bool> sieve(10000, true);
        for (long i = 2; i < 10000; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (long j = i * i; j < 10000; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, const BigInt& a) {
    BigInt x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_probable_prime(const BigInt& n, int rounds, Rng& rng) {
    if (n < 2) return false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++s;
    }
    for (int i = 0; i < rounds; ++i) {
        BigInt a = rng.range(2, n - 2);
        if (!miller_rabin_round(n, d, s, a)) return false;
    }
    return true;
}

namespace {

// Brent's cycle variant of the rho method. Returns a nontrivial factor of the
// odd composite n, or throws when the iteration budget runs out.
BigInt brent_rho(const BigInt& n, Rng& rng, std::uint64_t& budget) {
    if (n % 2 == 0) return 2;
    for (int attempt = 0; attempt < 64; ++attempt) {
        BigInt y = rng.range(1, n - 1);
        BigInt c = rng.range(1, n - 1);
        BigInt m = 128;
        BigInt g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1) {
                ys = y;
                BigInt lim = m < r - k ? m : r - k;
                for (BigInt i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = boost::multiprecision::gcd(q, n);
                k += m;
                if (budget < static_cast<std::uint64_t>(lim)) throw factoring_unavailable("factoring budget exhausted");
                budget -= static_cast<std::uint64_t>(lim);
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
                if (budget == 0) throw factoring_unavailable("factoring budget exhausted");
                --budget;
            }
        }
        if (g != n) return g;
    }
    throw factoring_unavailable("rho failed to split composite");
}

void factor_into(const BigInt& n, Rng& rng, std::uint64_t& budget, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n, 64, rng)) {
        ++out[n];
        return;
    }
    BigInt f = brent_rho(n, rng, budget);
    factor_into(f, rng, budget, out);
    factor_into(n / f, rng, budget, out);
}

} // namespace

BigInt factorization_value(const Factorization& f) {
    BigInt v = 1;
    for (const auto& e : f)
        for (unsigned i = 0; i < e.exponent; ++i) v *= e.prime;
    return v;
}

Factorization factor(const BigInt& n, Rng& rng, std::uint64_t budget) {
    if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
    std::map<BigInt, unsigned> acc;
    BigInt m = n;
    for (long p : small_primes()) {
        if (BigInt(p) * p > m) break;
        while (m % p == 0) {
            ++acc[p];
            m /= p;
        }
    }
    if (m > 1) {
        if (m < 100000000L) {
            ++acc[m]; // below the trial-division square, hence prime
        } else {
            factor_into(m, rng, budget, acc);
        }
    }
    Factorization out;
    for (const auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

S2SWitness rabin_shallit(const BigInt& p, Rng& rng) {
    if (p < 5 || p % 4 != 1) throw std::domain_error("rabin_shallit: need a prime p = 1 (mod 4)");
    BigInt m = (p - 1) / 4;
    BigInt root = 0;
    for (int round = 0; round < 256; ++round) {
        BigInt b = rng.range(1, p - 1);
        BigInt c = boost::multiprecision::powm(b, m, p);
        if (c * c % p == p - 1) {
            root = c;
            break;
        }
    }
    if (root == 0) throw std::domain_error("rabin_shallit: no root of -1 found; input not prime?");
    GaussianInt g = gaussian_gcd({p, 0}, {root, 1});
    BigInt c = abs(g.re), d = abs(g.im);
    if (c < d) std::swap(c, d);
    if (c * c + d * d != p) throw std::domain_error("rabin_shallit: descent failed; input not prime?");
    return {c, d, p};
}

std::optional<S2SWitness> s2s_decide_and_construct(const Factorization& f, Rng& rng) {
    for (const auto& e : f)
        if (e.prime % 4 == 3 && e.exponent % 2 == 1) return std::nullopt;
    GaussianInt acc{1, 0};
    BigInt scale = 1;
    for (const auto& e : f) {
        if (e.prime == 2) {
            for (unsigned i = 0; i < e.exponent; ++i) acc = acc * GaussianInt{1, 1};
        } else if (e.prime % 4 == 1) {
            S2SWitness w = rabin_shallit(e.prime, rng);
            GaussianInt z{w.c, w.d};
            for (unsigned i = 0; i < e.exponent; ++i) acc = acc * z;
        } else {
            for (unsigned i = 0; i < e.exponent / 2; ++i) scale *= e.prime;
        }
    }
    BigInt c = abs(acc.re) * scale, d = abs(acc.im) * scale;
    if (c < d) std::swap(c, d);
    BigInt n = factorization_value(f);
    if (c * c + d * d != n) throw integrity_error("s2s witness failed verification");
    return S2SWitness{c, d, n};
}

std::optional<S2SWitness> bounded_s2s(const BigInt& n, double delta, Rng& rng) {
    if (n < 5 || n % 4 != 1) throw std::invalid_argument("bounded_s2s: need n >= 5, n = 1 (mod 4)");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("bounded_s2s: delta must be in (0,1)");
    long J = static_cast<long>(std::ceil(std::log2(1.0 / delta)));
    BigInt m = (n - 1) / 4;
    for (long j = 0; j <= J; ++j) {
        BigInt b = rng.range(1, n - 1);
        BigInt c = boost::multiprecision::powm(b, m, n);
        if (c * c % n == n - 1) {
            // successful round: run the descent, then verify the alleged witness
            GaussianInt g = gaussian_gcd({n, 0}, {c, 1});
            BigInt x = abs(g.re), y = abs(g.im);
            if (x < y) std::swap(x, y);
            if (x * x + y * y == n) return S2SWitness{x, y, n};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace pauliv
