#include "pauliv/oracles.hpp"
#include "pauliv/synthesis.hpp"

#include <benchmark/benchmark.h>

using namespace pauliv;

static void BM_Synthesize(benchmark::State& state) {
    int digits = static_cast<int>(state.range(0));
    RealValue eps = RealValue::from_rational(BigRat(1, pow10(static_cast<unsigned>(digits))));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        RealValue theta = RealValue::pi_times(BigRat(static_cast<long>(seed % 1024) * 2, 1024));
        SynthesisOptions opt;
        opt.seed = seed++;
        auto res = synthesize(theta, eps, Variant::SA2, opt);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_Synthesize)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_MeniscusAdjust(benchmark::State& state) {
    RealValue eps = RealValue::from_rational(BigRat(1, pow10(static_cast<unsigned>(state.range(0)))));
    long k = 0;
    for (auto _ : state) {
        RealValue theta = RealValue::pi_times(BigRat(2 * (++k % 97), 97));
        Meniscus m(eps, theta, 24);
        benchmark::DoNotOptimize(adjust_meniscus(m));
    }
}
BENCHMARK(BM_MeniscusAdjust)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_EnumerateLevel(benchmark::State& state) {
    Meniscus m(RealValue::parse("0.05"), RealValue::parse("1.23"), 24);
    GridTransform tau = adjust_meniscus(m).tau;
    unsigned t = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(candidates_at(t, m, tau));
    }
}
BENCHMARK(BM_EnumerateLevel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_RabinShallit(benchmark::State& state) {
    Rng rng(77);
    BigInt p("1000000000000066600000000000001"); // prime, = 1 mod 4
    for (auto _ : state) {
        benchmark::DoNotOptimize(rabin_shallit(p, rng));
    }
}
BENCHMARK(BM_RabinShallit)->Unit(benchmark::kMicrosecond);

static void BM_FreenessSweep(benchmark::State& state) {
    auto tables = mod5_tables();
    for (auto _ : state) {
        benchmark::DoNotOptimize(freeness_sweep(static_cast<unsigned>(state.range(0)), tables));
    }
}
BENCHMARK(BM_FreenessSweep)->Arg(6)->Arg(8);

static void BM_Decompose(benchmark::State& state) {
    SynthesisOptions opt;
    opt.seed = 3;
    auto res = synthesize(RealValue::parse("2.2"), RealValue::parse("1e-5"), Variant::SA1Prime, opt);
    ExactUnitary u = res->unitary;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(u));
    }
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
