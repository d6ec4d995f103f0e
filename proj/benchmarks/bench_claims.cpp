#include <benchmark/benchmark.h>

#include <string>

#include "transcert/claims/registry.hpp"
#include "transcert/curves.hpp"
#include "transcert/ybe.hpp"

using namespace transcert;

static void BM_Claim(benchmark::State& state, const std::string& id) {
  for (auto _ : state) benchmark::DoNotOptimize(claims::Registry::builtin().run(id));
}
BENCHMARK_CAPTURE(BM_Claim, C02, std::string("C02"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Claim, C04, std::string("C04"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Claim, C05, std::string("C05"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Claim, C07, std::string("C07"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Claim, C12, std::string("C12"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Claim, C18, std::string("C18"))->Unit(benchmark::kMillisecond);

static void BM_YbeResidual(benchmark::State& state) {
  const auto j = ybe::alpha_family(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(ybe::ybe_residual(j, 0.3, -1.1));
}
BENCHMARK(BM_YbeResidual);

static void BM_CurveMeasures(benchmark::State& state) {
  const curves::Curve c = curves::sample_curve(curves::Family::RandomPolygon, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(curves::measures(c, curves::Definition::Width, 720));
}
BENCHMARK(BM_CurveMeasures)->Unit(benchmark::kMicrosecond);

static void BM_Falsify(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(curves::falsify_search(curves::Family::RandomPolygon, curves::Definition::Width,
                                                    static_cast<std::uint64_t>(state.range(0)), 1));
}
BENCHMARK(BM_Falsify)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
