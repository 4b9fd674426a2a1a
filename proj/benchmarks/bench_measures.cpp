#include <benchmark/benchmark.h>

#include <random>

#include "pidc/corpus.hpp"
#include "pidc/multiple.hpp"
#include "pidc/pid.hpp"

namespace {

using namespace pidc;

const Antichain kSingles{{1u, 2u}};

void BM_DecomposeExample(benchmark::State& state, const char* name) {
  JointDistribution d = canonical_example(name).distribution;
  SearchConfig cfg{16, 1};
  for (auto _ : state) {
    DecompositionResult r = decompose_two_sources(d, cfg);
    benchmark::DoNotOptimize(r.redundant);
  }
}
BENCHMARK_CAPTURE(BM_DecomposeExample, and, "And");
BENCHMARK_CAPTURE(BM_DecomposeExample, sum, "Sum");
BENCHMARK_CAPTURE(BM_DecomposeExample, rdnxor, "RdnXor");
BENCHMARK_CAPTURE(BM_DecomposeExample, rdnunqxor, "RdnUnqXor")->Unit(benchmark::kMillisecond);

JointDistribution random_distribution(std::mt19937& rng, int target_size) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Record> rows;
  for (int x1 = 0; x1 < 4; ++x1)
    for (int x2 = 0; x2 < 4; ++x2)
      for (int y = 0; y < target_size; ++y) {
        Record r;
        r.sources = {std::to_string(x1), std::to_string(x2)};
        r.target = std::to_string(y);
        r.mass = unit(rng);
        rows.push_back(std::move(r));
      }
  return JointDistribution::load(rows, DistributionOptions{.renormalize = true});
}

void BM_SharedInfoByAlphabet(benchmark::State& state) {
  std::mt19937 rng(42);
  JointDistribution d = random_distribution(rng, static_cast<int>(state.range(0)));
  SearchConfig cfg{16, 1};
  for (auto _ : state) {
    MeasureResult r = shared_info(d, kSingles, cfg);
    benchmark::DoNotOptimize(r.value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SharedInfoByAlphabet)->DenseRange(4, 14, 2)->Complexity();

void BM_SharedInfoThreads(benchmark::State& state) {
  JointDistribution d = canonical_example("RdnUnqXor").distribution;
  SearchConfig cfg{16, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    MeasureResult r = shared_info(d, kSingles, cfg);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SharedInfoThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MultipleInformation(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Record> rows;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Record r;
        r.sources = {std::to_string(a), std::to_string(b), std::to_string(c)};
        r.target = "t";
        r.mass = unit(rng);
        rows.push_back(std::move(r));
      }
  JointDistribution d = JointDistribution::load(rows, DistributionOptions{.renormalize = true});
  for (auto _ : state) {
    double v = multiple_information(d);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_MultipleInformation);

}  // namespace

BENCHMARK_MAIN();
