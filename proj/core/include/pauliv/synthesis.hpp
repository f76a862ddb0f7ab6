#pragma once

#include "pauliv/enumeration.hpp"
#include "pauliv/vword.hpp"

#include <cstdint>
#include <optional>

namespace pauliv {

enum class Variant { SA1Factor, SA1Prime, SA2 };

// Complete norm-equation solver: factor, apply the odd-exponent 4m+3
// criterion, build the witness. Degrades to procedure_p2 (with a stderr
// warning) if the factoring budget runs out.
std::optional<S2SWitness> procedure_p1(const BigInt& n, Rng& rng);

// Prime-gated solver: Nil unless n = 1 (mod 4) and n is (probable) prime;
// sound but deliberately incomplete (defines the restricted winner set).
std::optional<S2SWitness> procedure_p2(const BigInt& n, Rng& rng);

// Round-bounded solver: 4m+1 gate, Miller-Rabin with k >= ln(1/delta)/2
// rounds, then the bounded two-squares search. For prime n = 4m+1 the Nil
// probability is at most delta.
std::optional<S2SWitness> procedure_p_delta(const BigInt& n, double delta, Rng& rng);

struct SynthesisOptions {
    double delta = 0.1;       // SA2 only
    std::uint64_t seed = 1;
    int t_cap = 0;            // 0: default 3 log5(1/eps) + 200
    int precision = 0;        // 0: default from eps
    int precision_cap = 0;    // 0: 4 ceil(log10(1/eps)) + 64
    int sa2_horizon = 0;      // extra levels past t0 before Nil; 0: ceil(4 ln(t0+2))
};

struct SynthesisResult {
    ExactUnitary unitary;
    VWord word;
    Interval trace_dist;
    std::uint64_t explored = 0; // candidates examined (including norm-zero short circuits)
    std::uint64_t p_calls = 0;  // invocations of the selected procedure P
    long t0 = -1;               // least level with cumulative |C_t| >= 2, if reached
};

// The level-by-level deterministic search: enumerate exact-level candidates in
// column-major order, test each with the selected procedure P, return the
// first winner after verifying the norm equation, the decomposition round
// trip, and the trace distance. Returns nullopt only for SA2 (Nil) once the
// exploration horizon is exhausted; throws resource_error at the level cap.
std::optional<SynthesisResult> synthesize(const RealValue& theta, const RealValue& eps,
                                          Variant variant, const SynthesisOptions& opt = {});

} // namespace pauliv
