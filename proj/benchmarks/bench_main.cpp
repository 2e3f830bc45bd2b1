#include <benchmark/benchmark.h>

#include "mennicke/collector.hpp"
#include "mennicke/f2quot.hpp"
#include "mennicke/ggroup.hpp"
#include "mennicke/mgroup.hpp"
#include "mennicke/pgroup.hpp"
#include "mennicke/sampling.hpp"

using namespace mennicke;

namespace {

void BM_MMul(benchmark::State& state) {
  Sampler s(1);
  MElem p = s.melem(1000), q = s.melem(1000);
  for (auto _ : state) benchmark::DoNotOptimize(p = mul(p, q));
}
BENCHMARK(BM_MMul);

void BM_GMul(benchmark::State& state) {
  Sampler s(2);
  GElem g = s.gelem(1000), h = s.gelem(1000);
  for (auto _ : state) benchmark::DoNotOptimize(g = gmul(g, h));
}
BENCHMARK(BM_GMul);

void BM_PMul(benchmark::State& state) {
  Sampler s(3);
  PElem p{s.gelem(1000), true}, q{s.gelem(1000), true};
  for (auto _ : state) benchmark::DoNotOptimize(p = pmul(p, q));
}
BENCHMARK(BM_PMul);

void BM_Collect(benchmark::State& state) {
  GroupId group = static_cast<GroupId>(state.range(0));
  Word w = random_word(4, group, static_cast<std::size_t>(state.range(1)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(collect(w, group));
}
BENCHMARK(BM_Collect)
    ->Args({static_cast<int>(GroupId::M), 128})
    ->Args({static_cast<int>(GroupId::G), 64})
    ->Args({static_cast<int>(GroupId::P), 64});

void BM_Semantic(benchmark::State& state) {
  Sampler s(5);
  GElem g = s.gelem(100);
  for (auto _ : state) benchmark::DoNotOptimize(recognize(semantic(g)));
}
BENCHMARK(BM_Semantic);

void BM_Enumerate3Subspaces(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_3subspaces());
}
BENCHMARK(BM_Enumerate3Subspaces);

void BM_RUniquenessScan(benchmark::State& state) {
  materialize(QuotientId::GModGG2);
  for (auto _ : state) benchmark::DoNotOptimize(r_uniqueness_scan());
}
BENCHMARK(BM_RUniquenessScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
