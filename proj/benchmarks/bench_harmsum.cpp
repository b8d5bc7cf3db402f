#include <benchmark/benchmark.h>

#include "harmsum/constants.hpp"
#include "harmsum/quadrature.hpp"
#include "harmsum/registry.hpp"
#include "harmsum/specfun.hpp"

namespace {

using namespace harmsum;

void BM_LogBarnesG(benchmark::State& state) {
  const PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  auto scope = ctx.activate();
  const BigReal z = BigReal(3) / 4;
  for (auto _ : state) benchmark::DoNotOptimize(log_barnes_g(z, ctx));
}
BENCHMARK(BM_LogBarnesG)->Arg(30)->Arg(100);

void BM_Polylog(benchmark::State& state) {
  const PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  auto scope = ctx.activate();
  const BigReal z = BigReal(9) / 10;
  for (auto _ : state) benchmark::DoNotOptimize(polylog(3, z, ctx));
}
BENCHMARK(BM_Polylog)->Arg(30)->Arg(100);

void BM_Side(benchmark::State& state, const char* id, ParamMap params) {
  const PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_side(id, Side::Lhs, params, ctx));
}
BENCHMARK_CAPTURE(BM_Side, hardy_alt_cvz, "THM_HARDY_ALT", ParamMap{{"k", Rational(2)}, {"x", Rational(7, 2)}})
    ->Arg(30)
    ->Arg(60)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Side, s1_tail_fit, "THM_S1", ParamMap{})->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Side, valean_tanh_sinh, "VALEAN_INT", ParamMap{})->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Quadrature(benchmark::State& state) {
  const PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_param("atanh-log", {}, ctx));
}
BENCHMARK(BM_Quadrature)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  VerifyPolicy policy;
  policy.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify("COR_GIESEKING", {}, policy));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
