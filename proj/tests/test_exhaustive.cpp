#include <doctest.h>

#include "helpers.hpp"

using namespace ladder;
using namespace test_support;

// Complete sweeps over every monotone 0/1 game at micro sizes, both
// orientations. Nothing here is sampled: if one of these properties can
// fail at these sizes at all, this suite finds the game that breaks it.
TEST_SUITE("exhaustive micro games") {

namespace {

struct Dim {
  int n;
  int j;
};

template <typename Fn>
void for_each_monotone_micro_game(const Fn& fn) {
  for (Dim dim : {Dim{2, 2}, Dim{2, 3}, Dim{3, 2}}) {
    std::uint64_t profiles = 1;
    for (int p = 0; p < dim.n; ++p) profiles *= static_cast<std::uint64_t>(dim.j);
    for (std::uint64_t mask = 1; mask + 1 < (1ull << profiles); ++mask) {  // skip constants
      std::vector<double> outputs(profiles);
      for (std::uint64_t i = 0; i < profiles; ++i) {
        outputs[i] = (mask >> i) & 1 ? 1.0 : 0.0;
      }
      for (Orientation o : {Orientation::NonDecreasing, Orientation::NonIncreasing}) {
        GameLadder game(dim.n, dim.j, o, ExplicitTable{outputs});
        LevelTable table(game);
        if (!table.monotone().holds) continue;
        fn(game, table);
      }
    }
  }
}

}  // namespace

TEST_CASE("pivot characterization and uniqueness on every monotone micro game") {
  int games = 0;
  for_each_monotone_micro_game([&](const GameLadder& game, const LevelTable& table) {
    ++games;
    int k = table.levels().count();
    for_each_allocation(game, [&](const OrderedAllocation& alloc) {
      for (int i = 1; i <= k - 1; ++i) {
        int pivots = 0;
        for (int p = 0; p < game.players(); ++p) {
          bool fast = is_pivotal_extremes(table, alloc, i, p);
          CHECK(fast == is_pivotal_bruteforce(table, alloc, i, p));
          pivots += fast;
        }
        CHECK(pivots == 1);
      }
    });
  });
  CHECK(games == 80);
}

TEST_CASE("equivalence axioms hold on every micro game, monotone or not") {
  for (Dim dim : {Dim{2, 2}, Dim{3, 2}}) {
    std::uint64_t profiles = 1;
    for (int p = 0; p < dim.n; ++p) profiles *= static_cast<std::uint64_t>(dim.j);
    for (std::uint64_t mask = 0; mask < (1ull << profiles); ++mask) {
      std::vector<double> outputs(profiles);
      for (std::uint64_t i = 0; i < profiles; ++i) {
        outputs[i] = (mask >> i) & 1 ? 1.0 : 0.0;
      }
      GameLadder game(dim.n, dim.j, Orientation::NonDecreasing, ExplicitTable{outputs});
      CHECK(check_equivalence(relation_matrix(game)).all_hold());
    }
  }
}

TEST_CASE("two-level relations are transitive on every monotone micro game") {
  int incomplete = 0;
  for_each_monotone_micro_game([&](const GameLadder& game, const LevelTable&) {
    if (game.levels() != 2) return;
    RelationMatrix m = relation_matrix(game);
    if (!is_linear(m).linear) ++incomplete;
    CHECK(transitivity_violations(m).empty());
  });
  CHECK(incomplete == 0);  // at three players every two-level game here is complete
}

TEST_CASE("counts follow dominance and the correspondence injects, every micro game") {
  std::uint64_t injection_runs = 0;
  for_each_monotone_micro_game([&](const GameLadder& game, const LevelTable&) {
    GameLadder canon = configured_game(game, PivotConfig::Canonical);
    LevelTable table(canon);
    int k = table.levels().count();
    RelationMatrix m = relation_matrix(canon);
    PivotTable counts = pivot_counts(canon);
    CHECK(theorem2_check(m, counts).as_stated);
    for (int p = 0; p < canon.players(); ++p) {
      for (int q = 0; q < canon.players(); ++q) {
        if (p == q || !m.geq(p, q)) continue;
        for (int i = 1; i <= k - 1; ++i) {
          InjectionReport report = verify_injection(canon, p, q, i);
          CHECK(report.ok());
          CHECK(report.domain_size == counts.counts_for(i)[static_cast<std::size_t>(q)]);
          CHECK(report.image_size == report.domain_size);
          ++injection_runs;
        }
      }
    }
  });
  CHECK(injection_runs == 216);
}

}  // TEST_SUITE
