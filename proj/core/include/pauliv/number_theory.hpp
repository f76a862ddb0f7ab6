#pragma once

#include "pauliv/gaussian.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace pauliv {

// Seedable randomness source; all randomized operations take one explicitly so
// runs are reproducible and concurrent callers can use distinct streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, n), n >= 1
    BigInt below(const BigInt& n);
    // uniform in [lo, hi] inclusive
    BigInt range(const BigInt& lo, const BigInt& hi);

private:
    std::mt19937_64 eng_;
};

// Miller-Rabin strong-pseudoprime test with k random bases. Primes are always
// accepted; a composite passes with probability < 1/4^k.
bool is_probable_prime(const BigInt& n, int rounds, Rng& rng);

struct FactorEntry {
    BigInt prime;
    unsigned exponent;
};
// primes strictly increasing, product of prime^exponent == n
using Factorization = std::vector<FactorEntry>;

BigInt factorization_value(const Factorization& f);

// Trial division + Brent-cycle factoring under an iteration budget; throws
// factoring_unavailable when the budget runs out.
Factorization factor(const BigInt& n, Rng& rng, std::uint64_t budget = 80'000'000);

struct S2SWitness {
    BigInt c; // c >= d >= 0
    BigInt d;
    BigInt n; // c^2 + d^2
};

// Decides the two-squares property from a factorization (4m+3 primes must
// carry even exponents) and assembles a witness via Rabin-Shallit plus the
// Gaussian product identity. Nil (= nullopt) iff the criterion fails.
std::optional<S2SWitness> s2s_decide_and_construct(const Factorization& f, Rng& rng);

// Two-squares decomposition of a prime p = 4m+1: random rounds solve
// x^2 = -1 (mod p) (success chance 1/2 per round), then a deterministic
// Gaussian-integer gcd descent extracts the witness.
S2SWitness rabin_shallit(const BigInt& p, Rng& rng);

// Round-bounded variant: J+1 = ceil(log2(1/delta))+1 root-finding rounds; any
// returned witness is verified exactly; for prime n the Nil probability is
// below delta.
std::optional<S2SWitness> bounded_s2s(const BigInt& n, double delta, Rng& rng);

} // namespace pauliv
