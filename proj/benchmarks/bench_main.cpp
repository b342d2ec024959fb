#include <benchmark/benchmark.h>

#include "covertower/enumerate.hpp"
#include "covertower/homology.hpp"
#include "covertower/orbit.hpp"
#include "covertower/traintrack.hpp"

using namespace covertower;

namespace {

const Surface S2(2);

void BM_Enumerate(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_covers(S2, d, {.budget = default_budget(), .jobs = jobs}));
  }
}
BENCHMARK(BM_Enumerate)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

// Complex plus Smith-form basis for one cover of each degree.
void BM_HomologyBasis(benchmark::State& state) {
  const auto c = enumerate_covers(S2, static_cast<int>(state.range(0))).back();
  for (auto _ : state) {
    const auto k = make_complex(c);
    benchmark::DoNotOptimize(homology_basis(k));
  }
}
BENCHMARK(BM_HomologyBasis)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_PairingGram(benchmark::State& state) {
  const auto c = enumerate_covers(S2, static_cast<int>(state.range(0))).back();
  const auto basis = homology_basis(make_complex(c));
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (const auto& x : basis) {
      for (const auto& y : basis) sum += pairing_on_cover(x, y);
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_PairingGram)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_LiftTrack(benchmark::State& state) {
  const auto t = three_branch_track(S2);
  const auto c = enumerate_covers(S2, static_cast<int>(state.range(0))).back();
  for (auto _ : state) benchmark::DoNotOptimize(lift_track(t, c));
}
BENCHMARK(BM_LiftTrack)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_Orbit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_density_experiment(S2, static_cast<std::uint64_t>(state.range(0)), 2000, 0));
  }
}
BENCHMARK(BM_Orbit)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
