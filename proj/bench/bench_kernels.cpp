// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "gyro/coset_action.hpp"

namespace {

// Glauberman loops of order 21, 39, 57.
gyro::CayleyTable loop(std::int64_t p) { return fixtures::glauberman(static_cast<std::uint32_t>(p), 3); }

void BM_ValidateParallel(benchmark::State& state) {
  const auto t = loop(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::validateGyrogroup(t));
  state.SetLabel("n=" + std::to_string(t.order()));
}

void BM_ValidateSerial(benchmark::State& state) {
  const auto t = loop(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::validateGyrogroupSerial(t));
  state.SetLabel("n=" + std::to_string(t.order()));
}

gyro::Subset normalPart(std::int64_t p) {
  gyro::Subset h(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = static_cast<gyro::Elem>(i);
  return h;
}

void BM_CriterionParallel(benchmark::State& state) {
  const auto g = fixtures::gyrogroup(loop(state.range(0)));
  const auto h = normalPart(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::cosetCriterion(g, h));
}

void BM_CriterionSerial(benchmark::State& state) {
  const auto g = fixtures::gyrogroup(loop(state.range(0)));
  const auto h = normalPart(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::cosetCriterionSerial(g, h));
}

void BM_OrbitsAndStabilizers(benchmark::State& state) {
  const auto g = fixtures::gyrogroup(loop(state.range(0)));
  const auto x = gyro::requireAction(g, *gyro::cosetActionTable(g, normalPart(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::orbitsAndStabilizers(x));
}

}  // namespace

BENCHMARK(BM_ValidateParallel)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateSerial)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CriterionParallel)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CriterionSerial)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OrbitsAndStabilizers)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
