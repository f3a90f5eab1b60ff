#include <benchmark/benchmark.h>

#include <ladder/ladder.hpp>

namespace {

using namespace ladder;

void BM_EvaluateDownSet(benchmark::State& state) {
  GameLadder game = make_prop2();
  Profile x({1, 2, 3, 1, 1, 2, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(game.evaluate(x));
  }
}
BENCHMARK(BM_EvaluateDownSet);

void BM_LevelTableBuild(benchmark::State& state) {
  GameLadder game = make_prop2();
  for (auto _ : state) {
    LevelTable table(game);
    benchmark::DoNotOptimize(table.levels().count());
  }
}
BENCHMARK(BM_LevelTableBuild);

void BM_RelationMatrix(benchmark::State& state) {
  GameLadder game = make_prop2();
  for (auto _ : state) {
    benchmark::DoNotOptimize(relation_matrix(game));
  }
}
BENCHMARK(BM_RelationMatrix);

void BM_PivotCountsMicro(benchmark::State& state) {
  GameLadder game = make_cap_dual();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pivot_counts(game));
  }
}
BENCHMARK(BM_PivotCountsMicro);

// 5040 orders x 2187 profiles; the headline full-enumeration workload.
void BM_PivotCountsFull(benchmark::State& state) {
  GameLadder game = dualize(make_prop2());
  PivotOptions options;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pivot_counts(game, options));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 11022480);
}
BENCHMARK(BM_PivotCountsFull)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  GameLadder game = configured_game(make_prop2(), PivotConfig::Canonical);
  RelationMatrix m = relation_matrix(game);
  Ladder initial{{6, 5, 4, 3, 2, 1, 0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_ladder(m, initial, 100));
  }
}
BENCHMARK(BM_Simulate);

}  // namespace

BENCHMARK_MAIN();
