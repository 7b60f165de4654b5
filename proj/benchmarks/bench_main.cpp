#include "demj/chebyshev.hpp"
#include "demj/demjanenko.hpp"
#include "demj/descent.hpp"
#include "demj/dynamics.hpp"
#include "demj/elliptic.hpp"
#include "demj/localglobal.hpp"

#include <benchmark/benchmark.h>

using namespace demj;

namespace {

void BM_ChebEval(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Rational x = make_rational(7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cheb_eval(d, x));
}
BENCHMARK(BM_ChebEval)->Arg(10)->Arg(50)->Arg(100);

void BM_CanonicalHeight(benchmark::State& state) {
  const EllipticCurve e(16, -16, 0);
  const ECPoint G = scalar_mul(e, state.range(0), ECPoint(4, -16));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_height(e, G, 1e-10));
}
BENCHMARK(BM_CanonicalHeight)->Arg(1)->Arg(5)->Arg(20);

void BM_CertifyX4(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_points(SymQuartic(-4, -3), ECPoint(4, -16), 1, {40, 1e-10}));
}
BENCHMARK(BM_CertifyX4)->Unit(benchmark::kMillisecond);

void BM_RootNumber(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(root_number(1999));
}
BENCHMARK(BM_RootNumber);

void BM_SelmerReport(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(selmer_report(p));
}
BENCHMARK(BM_SelmerReport)->Arg(73)->Arg(409)->Unit(benchmark::kMicrosecond);

void BM_LocalSolvability(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(everywhere_locally_solvable(p));
}
BENCHMARK(BM_LocalSolvability)->Arg(73)->Arg(433)->Unit(benchmark::kMillisecond);

void BM_ConjectureScan(benchmark::State& state) {
  const long cap = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_scan(7, cap));
}
BENCHMARK(BM_ConjectureScan)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
