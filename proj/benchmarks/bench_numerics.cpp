#include <benchmark/benchmark.h>

#include "transcert/cinterval.hpp"
#include "transcert/elementary.hpp"
#include "transcert/expr/evaluator.hpp"
#include "transcert/quadrature.hpp"

using namespace transcert;

static void BM_ConstPi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(const_pi(state.range(0)));
}
BENCHMARK(BM_ConstPi)->Arg(128)->Arg(512)->Arg(2048);

static void BM_ConstE(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(const_e(state.range(0)));
}
BENCHMARK(BM_ConstE)->Arg(128)->Arg(512)->Arg(2048);

static void BM_Exp(benchmark::State& state) {
  const RInterval x = RInterval::from_rational(BigRational(37, 3), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exp(x));
}
BENCHMARK(BM_Exp)->Arg(128)->Arg(512);

static void BM_Sin(benchmark::State& state) {
  const RInterval x = RInterval::from_rational(BigRational(-457, 10), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sin(x));
}
BENCHMARK(BM_Sin)->Arg(128)->Arg(512);

static void BM_Ln(benchmark::State& state) {
  const RInterval x = RInterval::from_rational(BigRational(355, 113), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ln(x));
}
BENCHMARK(BM_Ln)->Arg(128)->Arg(512);

static void BM_CExp(benchmark::State& state) {
  const CInterval z(RInterval::from_int(1, state.range(0)), const_pi(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cexp(z));
}
BENCHMARK(BM_CExp)->Arg(128)->Arg(512);

static void BM_CPow(benchmark::State& state) {
  const CInterval pi(const_pi(state.range(0)));
  const CInterval i = CInterval::imaginary_unit(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cpow(pi, i));
}
BENCHMARK(BM_CPow)->Arg(128)->Arg(512);

static void BM_EvalNew4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(expr::eval("abs(pi^i - i^pi)", state.range(0)));
}
BENCHMARK(BM_EvalNew4)->Arg(128)->Arg(256);

static void BM_Simpson(benchmark::State& state) {
  const auto f = quad::gaussian();
  for (auto _ : state)
    benchmark::DoNotOptimize(quad::verified_simpson(f, -4, 4, static_cast<unsigned>(state.range(0)), 128));
}
BENCHMARK(BM_Simpson)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
