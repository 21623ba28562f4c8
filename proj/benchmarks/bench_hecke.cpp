#include <benchmark/benchmark.h>

#include "coboundary/hecke.hpp"

using namespace coboundary;

namespace {

const std::vector<hecke::Partition> kShapes = {{2, 1}, {3, 2}, {3, 2, 1}, {4, 2, 1}};

void BM_CheckShape(benchmark::State& state) {
  const auto& shape = kShapes[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(hecke::check_shape(shape));
}
BENCHMARK(BM_CheckShape)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_TauMatrices(benchmark::State& state) {
  const hecke::SeminormalRep rep(kShapes[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state)
    for (int i = 1; i < rep.r(); ++i) benchmark::DoNotOptimize(hecke::tau_matrix(rep, i));
}
BENCHMARK(BM_TauMatrices)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CactusMatrix(benchmark::State& state) {
  const hecke::SeminormalRep rep(kShapes[static_cast<std::size_t>(state.range(0))]);
  const auto g = cactus::CactusWord::parse(rep.r(), "s(1," + std::to_string(rep.r()) + ")");
  for (auto _ : state) benchmark::DoNotOptimize(hecke::cactus_matrix(rep, g));
}
BENCHMARK(BM_CactusMatrix)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
