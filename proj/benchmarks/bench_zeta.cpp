#include <benchmark/benchmark.h>

#include <hurwitz/confluent.hpp>
#include <hurwitz/numerics.hpp>
#include <hurwitz/verify.hpp>
#include <hurwitz/zeta.hpp>

namespace {

using hurwitz::Complex;

void BM_Gamma(benchmark::State& state) {
    const Complex s(-2.5, 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz::gamma(s));
}
BENCHMARK(BM_Gamma);

void BM_UpperIncompleteGamma(benchmark::State& state) {
    const Complex a(0.5, 1.0);
    const Complex x(0.0, -2.0 * 3.141592653589793 * 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz::upper_incomplete_gamma(a, x));
}
BENCHMARK(BM_UpperIncompleteGamma);

void BM_HurwitzDirect(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz::hurwitz_direct(Complex(2.0, 3.0), 0.3));
}
BENCHMARK(BM_HurwitzDirect);

void BM_HurwitzEm(benchmark::State& state) {
    hurwitz::EvalParams p;
    p.em_order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz::hurwitz_em(Complex(-1.5, 2.0), 0.3, p));
}
BENCHMARK(BM_HurwitzEm)->Arg(4)->Arg(8)->Arg(16);

void BM_HurwitzViaU(benchmark::State& state) {
    hurwitz::EvalParams p;
    p.l_cap = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz::hurwitz_via_u(Complex(0.5, 1.0), 0.25, p));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HurwitzViaU)->RangeMultiplier(10)->Range(100, 10'000)->Complexity(benchmark::oN);

void BM_Polylog(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz::polylog_L(Complex(2.5, 1.0), 0.37));
}
BENCHMARK(BM_Polylog);

void BM_TricomiIntegral(benchmark::State& state) {
    hurwitz::ConfluentParams p;
    p.u_route = hurwitz::ConfluentParams::URoute::laplace_integral;
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz::tricomi_u(Complex(1.5, 0.5), Complex(0.3, 1.0), 2.0, p));
}
BENCHMARK(BM_TricomiIntegral);

void BM_VerifyHurwitzGrid(benchmark::State& state) {
    const auto grid = hurwitz::default_hurwitz_grid();
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz::check_hurwitz_relation(grid));
}
BENCHMARK(BM_VerifyHurwitzGrid)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
