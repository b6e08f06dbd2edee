// Serial reference against the OpenMP census, and the two basis orders of the
// embedding search on the fixture forms.
#include <benchmark/benchmark.h>

#include "gamma4/census.hpp"

using namespace gamma4;

namespace {

const std::filesystem::path kData{GAMMA4_DATA_DIR};
const std::filesystem::path kFixtures{GAMMA4_FIXTURE_DIR};

const std::vector<KnotEntry>& knots() {
  static const auto entries = read_knot_table(kData / "knots10.csv");
  return entries;
}

void BM_census_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analyze_census_serial(knots()));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(knots().size()));
}
BENCHMARK(BM_census_serial)->Unit(benchmark::kMillisecond);

void BM_census_parallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_census(knots(), {}, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(knots().size()));
}
BENCHMARK(BM_census_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_embed(benchmark::State& state, const char* fixture, BasisOrder order) {
  const auto g = read_gram(kFixtures / (std::string(fixture) + ".gram"));
  const Int det = std::abs(determinant(g));
  const auto gram = g.direct_sum(IntMatrix{{g(0, 0) < 0 ? -det : det}});
  const auto problem = EmbeddingProblem::make(gram, gram.rows());
  std::size_t nodes = 0;
  for (auto _ : state) {
    const auto r = embed(problem, {1'000'000'000, order});
    nodes = r.nodes_searched;
    benchmark::DoNotOptimize(r);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

#define EMBED_BENCH(name)                                                                   \
  BENCHMARK_CAPTURE(BM_embed, name##_decreasing, #name, BasisOrder::DecreasingNorm);      \
  BENCHMARK_CAPTURE(BM_embed, name##_increasing, #name, BasisOrder::IncreasingNorm)

EMBED_BENCH(minus_10_9);
EMBED_BENCH(minus_10_113);
EMBED_BENCH(10_2);
EMBED_BENCH(10_112);
EMBED_BENCH(plus_10_33);

}  // namespace

BENCHMARK_MAIN();
