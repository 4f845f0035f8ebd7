// Exact (recurrence, O(n)) versus asymptotic (closed form, O(1)) evaluation:
// where the crossover pays off, and what the supporting machinery costs.
#include <benchmark/benchmark.h>

#include <complex>

#include "glag/asymptotics.hpp"
#include "glag/geronimus.hpp"
#include "glag/laguerre.hpp"
#include "glag/second_kind.hpp"
#include "glag/special.hpp"

namespace {

const std::complex<double> kZ{-2.0, 1.0};

void BM_EvalMonicLaguerre(benchmark::State& state) {
    const int n = (int)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(glag::eval_monic_laguerre(n, 0.5, kZ)[n]);
    state.SetComplexityN(n);
}
BENCHMARK(BM_EvalMonicLaguerre)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_PerronMonic(benchmark::State& state) {
    const int n = (int)state.range(0);
    const glag::ComplexPoint z(kZ);
    for (auto _ : state) benchmark::DoNotOptimize(glag::perron_monic(n, 0.5, z).value);
}
BENCHMARK(BM_PerronMonic)->RangeMultiplier(4)->Range(64, 16384);

void BM_LambdaTable(benchmark::State& state) {
    const int n = (int)state.range(0);
    const glag::GeronimusParams p(0.5, -1.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(glag::LambdaTable(p, n).lambda(n));
    state.SetComplexityN(n);
}
BENCHMARK(BM_LambdaTable)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_EvalQ_tableReady(benchmark::State& state) {
    const int n = (int)state.range(0);
    const glag::GeronimusParams p(0.5, -1.0, 1.0);
    const glag::LambdaTable table(p, n);
    for (auto _ : state) benchmark::DoNotOptimize(glag::eval_Q(n, table, kZ));
}
BENCHMARK(BM_EvalQ_tableReady)->RangeMultiplier(4)->Range(64, 16384);

void BM_StrongOuterQ(benchmark::State& state) {
    const int n = (int)state.range(0);
    const glag::GeronimusParams p(0.5, -1.0, 1.0);
    const glag::ComplexPoint z(kZ);
    for (auto _ : state) benchmark::DoNotOptimize(glag::strong_outer_Q(n, p, z));
}
BENCHMARK(BM_StrongOuterQ)->RangeMultiplier(4)->Range(64, 16384);

void BM_SecondKindCF(benchmark::State& state) {
    const int n = (int)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(glag::eval_second_kind(n, 0.5, -1.0));
}
BENCHMARK(BM_SecondKindCF)->RangeMultiplier(4)->Range(16, 4096);

void BM_SecondKindAsymptotic(benchmark::State& state) {
    const int n = (int)state.range(0);
    const glag::ComplexPoint z(-1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(glag::asymp_second_kind(n, 0.5, z, 1));
}
BENCHMARK(BM_SecondKindAsymptotic)->RangeMultiplier(4)->Range(16, 4096);

void BM_BesselK(benchmark::State& state) {
    const double x = (double)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(glag::bessel_k(1.5, x));
}
BENCHMARK(BM_BesselK)->Arg(5)->Arg(50)->Arg(500);

void BM_BesselKAsymptotic(benchmark::State& state) {
    const double x = (double)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(glag::bessel_k_asymptotic(1.5, x, 4));
}
BENCHMARK(BM_BesselKAsymptotic)->Arg(5)->Arg(50)->Arg(500);

void BM_KummerU(benchmark::State& state) {
    const double a = (double)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(glag::kummer_u(a, 0.5, 1.0));
}
BENCHMARK(BM_KummerU)->Arg(2)->Arg(50)->Arg(500);

void BM_ZerosQ(benchmark::State& state) {
    const int n = (int)state.range(0);
    const glag::GeronimusParams p(0.5, -1.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(glag::zeros_Q(n, p));
}
BENCHMARK(BM_ZerosQ)->Arg(10)->Arg(30)->Arg(60);

} // namespace

BENCHMARK_MAIN();
