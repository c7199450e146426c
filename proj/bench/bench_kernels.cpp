#include <benchmark/benchmark.h>

#include <omp.h>

#include "../tests/common/synthetic.hpp"
#include "readengine/kernels.hpp"
#include "readengine/rewrite.hpp"

namespace {

using namespace readengine;

const ResourceBundle& bundle() {
  static const std::filesystem::path dir = READENGINE_RESOURCE_DIR;
  static const ResourceBundle b =
      ResourceBundle::load(dir / "wordnet-3.0", dir / "SentiWordNet_3.0.0.txt", dir / "subtlex-us.tsv");
  return b;
}

std::vector<std::string> words(std::size_t n) {
  const auto& all = bundle().frequency.words();
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min(n, all.size()))};
}

void BM_FeaturesSerial(benchmark::State& state) {
  const auto w = words(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::extract_features_serial(w, bundle()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FeaturesParallel(benchmark::State& state) {
  const auto w = words(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::extract_features_parallel(w, bundle()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct Objective {
  std::vector<kernels::FeatureRow> rows;
  std::vector<int> labels;
  explicit Objective(std::size_t n) {
    for (const auto& s : synthetic::logistic_samples(paper_coefficients(Dimension::ie), n, 1)) {
      rows.push_back(s.features.to_array());
      labels.push_back(s.label);
    }
  }
};

void BM_ObjectiveSerial(benchmark::State& state) {
  const Objective o(static_cast<std::size_t>(state.range(0)));
  const kernels::FeatureRow w{};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::logistic_objective_serial(o.rows, o.labels, 0.1, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ObjectiveParallel(benchmark::State& state) {
  const Objective o(static_cast<std::size_t>(state.range(0)));
  const kernels::FeatureRow w{};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::logistic_objective_parallel(o.rows, o.labels, 0.1, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RewriteSerial(benchmark::State& state) {
  const auto titles = synthetic::titles(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rewrite_serial(titles, bundle(), {}));
}

void BM_RewriteParallel(benchmark::State& state) {
  const auto titles = synthetic::titles(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rewrite_parallel(titles, bundle(), {}));
}

}  // namespace

BENCHMARK(BM_FeaturesSerial)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FeaturesParallel)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObjectiveSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ObjectiveParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RewriteSerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RewriteParallel)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
