#include <random>

#include "benchmark/benchmark.h"
#include "optseq/arrays.hpp"
#include "optseq/asds.hpp"
#include "optseq/cocycles.hpp"
#include "optseq/search.hpp"
#include "optseq/seq.hpp"
#include "optseq/transforms.hpp"

namespace {

using namespace optseq;

QuaternarySeq random_quaternary(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> e(n);
  for (auto& x : e) x = static_cast<std::uint8_t>(rng() & 3);
  return QuaternarySeq(std::move(e));
}

void BM_AutocorrelationSpectrum(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto f = random_quaternary(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(autocorrelation_spectrum(f));
}
BENCHMARK(BM_AutocorrelationSpectrum)->Arg(9)->Arg(64)->Arg(1024);

void BM_CocycleRowExcess(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const Cocycle psi(m, true, rng() & ((std::uint64_t{1} << (2 * m - 2)) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(row_excess(cocycle_matrix(psi)));
}
BENCHMARK(BM_CocycleRowExcess)->Arg(5)->Arg(9)->Arg(13);

void BM_GobaPredicate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto plan = make_expansion_plan(Shape({2, m}), {1, 0});
  std::mt19937_64 rng(3);
  const auto gray = quat_to_array(random_quaternary(rng, m));
  const auto values = to_binary_array(gray).v;
  for (auto _ : state) benchmark::DoNotOptimize(is_goba(plan, values));
}
BENCHMARK(BM_GobaPredicate)->Arg(5)->Arg(9)->Arg(13);

void BM_ClassifyPair(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  std::vector<int> b, d;
  for (int j = 0; j < m; ++j) {
    if (rng() & 1) b.push_back(j);
    if (rng() & 1) d.push_back(j);
  }
  const SubsetPair pair(m, b, d);
  for (auto _ : state) benchmark::DoNotOptimize(classify(pair));
}
BENCHMARK(BM_ClassifyPair)->Arg(9)->Arg(21);

void BM_SearchOqs(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_oqs(m, {}).size());
}
BENCHMARK(BM_SearchOqs)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
