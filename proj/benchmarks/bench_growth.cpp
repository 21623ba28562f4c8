#include <benchmark/benchmark.h>

#include <random>

#include "coboundary/cactus.hpp"
#include "coboundary/growth.hpp"

using namespace coboundary;

namespace {

// Random dominant walk of vector steps for GL(n), fixed seed.
localrules::HighestWeightWord random_word(int n, int length) {
  const auto ctx = weights::CartanContext::gl(n);
  std::mt19937_64 rng(7);
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  std::vector<weights::Weight> corners{weights::from_partition(ctx, {})};
  while (static_cast<int>(corners.size()) <= length) {
    std::vector<std::size_t> addable;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (i == 0 || parts[i] < parts[i - 1]) addable.push_back(i);
    ++parts[addable[std::uniform_int_distribution<std::size_t>(0, addable.size() - 1)(rng)]];
    corners.push_back(weights::from_partition(ctx, weights::Partition(parts)));
  }
  return localrules::HighestWeightWord::from_corners(ctx, std::move(corners));
}

void BM_Evacuation(benchmark::State& state) {
  const auto w = random_word(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(growth::evacuation(w));
}
BENCHMARK(BM_Evacuation)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Promotion(benchmark::State& state) {
  const auto w = random_word(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(growth::promotion(w));
}
BENCHMARK(BM_Promotion)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CactusGenerator(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto w = random_word(3, r);
  const cactus::CactusGen g{2, r - 1};
  for (auto _ : state) benchmark::DoNotOptimize(growth::act(g, w));
}
BENCHMARK(BM_CactusGenerator)->Arg(8)->Arg(16)->Arg(32);

void BM_Cylinder(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto w = random_word(3, r);
  for (auto _ : state) benchmark::DoNotOptimize(growth::cylinder_from_row(w, r));
}
BENCHMARK(BM_Cylinder)->Arg(8)->Arg(16)->Arg(32);

void BM_WallCross(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto window = growth::cylinder_from_row(random_word(3, r), r);
  const cactus::CactusGen g{2, r - 1};
  for (auto _ : state) benchmark::DoNotOptimize(growth::wall_cross(g, window));
}
BENCHMARK(BM_WallCross)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
