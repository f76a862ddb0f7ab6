#include "pauliv/synthesis.hpp"

#include "pauliv/errors.hpp"

#include <cmath>
#include <iostream>

namespace pauliv {

std::optional<S2SWitness> procedure_p1(const BigInt& n, Rng& rng) {
    if (n < 0) throw std::invalid_argument("procedure_p1: n must be >= 0");
    if (n == 0) return S2SWitness{0, 0, 0};
    try {
        return s2s_decide_and_construct(factor(n, rng), rng);
    } catch (const factoring_unavailable&) {
        std::cerr << "warning: factoring budget exceeded for n=" << n
                  << "; falling back to the prime-gated procedure\n";
        return procedure_p2(n, rng);
    }
}

std::optional<S2SWitness> procedure_p2(const BigInt& n, Rng& rng) {
    if (n < 0) throw std::invalid_argument("procedure_p2: n must be >= 0");
    if (n % 4 != 1) return std::nullopt;
    if (!is_probable_prime(n, 64, rng)) return std::nullopt;
    return rabin_shallit(n, rng);
}

std::optional<S2SWitness> procedure_p_delta(const BigInt& n, double delta, Rng& rng) {
    if (n < 0) throw std::invalid_argument("procedure_p_delta: n must be >= 0");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("procedure_p_delta: delta in (0,1)");
    if (n % 4 != 1) return std::nullopt;
    int k = static_cast<int>(std::ceil(0.5 * std::log(1.0 / delta)));
    if (k < 1) k = 1;
    if (!is_probable_prime(n, k, rng)) return std::nullopt;
    if (n < 5) return std::nullopt;
    return bounded_s2s(n, delta, rng);
}

namespace {

int default_t_cap(int eps_digits) {
    // 3 log5(1/eps) = 3 log10(1/eps) / log10(5)
    return static_cast<int>(3.0 * eps_digits / 0.6989700043360189) + 200;
}

} // namespace

std::optional<SynthesisResult> synthesize(const RealValue& theta, const RealValue& eps,
                                          Variant variant, const SynthesisOptions& opt) {
    int precision = opt.precision;
    Meniscus probe(eps, theta, precision > 0 ? precision : 16, opt.precision_cap);
    if (precision <= 0) precision = probe.eps_digits() + 24;
    Meniscus m(eps, theta, precision, opt.precision_cap);
    MeniscusAdjustment adj = adjust_meniscus(m);

    Rng rng(opt.seed);
    int t_cap = opt.t_cap > 0 ? opt.t_cap : default_t_cap(m.eps_digits());

    std::uint64_t explored = 0, p_calls = 0;
    long t0 = -1;
    std::uint64_t prev_parity = 0;

    auto eps_fn = eps.enclosure_fn();

    for (unsigned t = 0;; ++t) {
        if (static_cast<int>(t) > t_cap)
            throw resource_error("synthesize: level cap " + std::to_string(t_cap) + " exceeded");
        BigInt f5 = five_pow(t);
        std::uint64_t parity_count = 0;
        std::optional<SynthesisResult> found;

        for_each_member(m, adj.tau, t, [&](const Candidate& cand, bool exact) {
            ++parity_count;
            if (!exact) return true; // level < t, already explored
            ++explored;
            const GaussianInt& g = cand.u_scaled;
            BigInt n = f5 - g.norm();
            std::optional<S2SWitness> w;
            if (n == 0) {
                w = S2SWitness{0, 0, 0}; // candidate exactly on the circle
            } else {
                ++p_calls;
                switch (variant) {
                case Variant::SA1Factor: w = procedure_p1(n, rng); break;
                case Variant::SA1Prime: w = procedure_p2(n, rng); break;
                case Variant::SA2: w = procedure_p_delta(n, opt.delta, rng); break;
                }
            }
            if (!w) return true;
            ExactUnitary unit{g, GaussianInt{w->c, w->d}, t};
            if (!unit.norm_equation_holds())
                throw integrity_error("synthesize: witness violates the norm equation");
            VWord word = decompose(unit);
            if (!(evaluate(word) == unit))
                throw integrity_error("synthesize: decomposition round trip failed");
            RealValue th = theta;
            auto td_fn = [th, g, wv = unit.v, t](int p) {
                return trace_distance(g, wv, t, th, p);
            };
            if (compare_strict(td_fn, eps_fn, m.precision(), m.precision_cap()) != Cmp::Less)
                return true; // cannot certify the distance; keep searching
            SynthesisResult res;
            res.unitary = unit;
            res.word = std::move(word);
            res.trace_dist = td_fn(m.precision() + m.eps_digits());
            found = std::move(res);
            return false;
        });

        std::uint64_t cum = parity_count + prev_parity;
        if (t0 < 0 && cum >= 2) t0 = static_cast<long>(t);
        prev_parity = parity_count;

        if (found) {
            found->explored = explored;
            found->p_calls = p_calls;
            found->t0 = t0;
            return found;
        }

        if (variant == Variant::SA2 && t0 >= 0) {
            long horizon = opt.sa2_horizon > 0
                               ? opt.sa2_horizon
                               : static_cast<long>(std::ceil(4.0 * std::log(static_cast<double>(t0) + 2.0)));
            if (static_cast<long>(t) >= t0 + horizon) return std::nullopt;
        }
    }
}

} // namespace pauliv
