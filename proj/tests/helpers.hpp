#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <ladder/ladder.hpp>

namespace test_support {

using namespace ladder;

inline Profile P(std::vector<Pos> positions) { return Profile(std::move(positions)); }

inline EntryOrder order_of(std::vector<int> players_1based) {
  for (int& p : players_1based) --p;
  return EntryOrder(std::move(players_1based));
}

/// All entry orders of n players, lexicographic.
inline std::vector<EntryOrder> all_orders(int n) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) seq[static_cast<std::size_t>(p)] = p;
  std::vector<EntryOrder> orders;
  do {
    orders.push_back(EntryOrder(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return orders;
}

inline void for_each_profile(int n, int j, const std::function<void(const Profile&)>& fn) {
  Profile x = Profile::filled(n, 1);
  do {
    fn(x);
  } while (next_profile(x, j));
}

inline void for_each_allocation(const GameLadder& game,
                                const std::function<void(const OrderedAllocation&)>& fn) {
  for (const EntryOrder& order : all_orders(game.players())) {
    for_each_profile(game.players(), game.levels(), [&](const Profile& x) {
      fn(OrderedAllocation{order, x});
    });
  }
}

// ---------------------------------------------------------------------
// Independent oracles. These re-derive expected values straight from the
// definitions with their own enumeration code; they never call the
// library paths they are used to check.
// ---------------------------------------------------------------------

/// Exact range of f, descending, by sweeping every profile.
inline std::vector<double> oracle_levels(const GameLadder& game) {
  std::set<double> values;
  for_each_profile(game.players(), game.levels(),
                   [&](const Profile& x) { values.insert(game.evaluate(x)); });
  return {values.rbegin(), values.rend()};
}

/// Definition of the local beating relation, quantified over every full
/// profile with both players pinned at s.
inline bool oracle_beats_local(const GameLadder& game, int p, int q, Pos r, Pos s) {
  bool holds = true;
  for_each_profile(game.players(), game.levels(), [&](const Profile& base) {
    if (base[p] != s || base[q] != s) return;
    Profile xp = base;
    xp[p] = r;
    Profile xq = base;
    xq[q] = r;
    if (game.evaluate(xp) < game.evaluate(xq)) holds = false;
  });
  return holds;
}

inline bool oracle_global_geq(const GameLadder& game, int p, int q) {
  for (Pos s = 1; s < game.levels(); ++s) {
    for (Pos r = s + 1; r <= game.levels(); ++r) {
      if (!oracle_beats_local(game, p, q, r, s)) return false;
    }
  }
  return true;
}

/// The two defining condition pairs for the pivotal player, evaluated by
/// enumerating the agreement sets with fresh code.
inline bool oracle_is_pivotal(const GameLadder& game, const OrderedAllocation& alloc,
                              int level_i, int p) {
  std::vector<double> levels = oracle_levels(game);
  double z = levels[static_cast<std::size_t>(level_i - 1)];
  int n = game.players();
  int rp = alloc.order.rank_of(p);

  auto agreement_scan = [&](int prefix_ranks, bool& any_lt, bool& any_ge) {
    any_lt = false;
    any_ge = false;
    std::vector<int> later;
    for (int r = prefix_ranks; r < n; ++r) later.push_back(alloc.order.player_at_rank(r));
    std::vector<Pos> digits(later.size(), 1);
    while (true) {
      Profile x = alloc.profile;
      for (std::size_t d = 0; d < later.size(); ++d) x[later[d]] = digits[d];
      double v = game.evaluate(x);
      (v >= z ? any_ge : any_lt) = true;
      std::size_t d = 0;
      for (; d < digits.size(); ++d) {
        if (digits[d] < game.levels()) {
          ++digits[d];
          break;
        }
        digits[d] = 1;
      }
      if (d == digits.size()) return;
    }
  };

  bool lt_p = false;
  bool ge_p = false;
  agreement_scan(rp + 1, lt_p, ge_p);
  if (rp == 0) return !lt_p || !ge_p;
  bool lt_prec = false;
  bool ge_prec = false;
  agreement_scan(rp, lt_prec, ge_prec);
  return (!lt_p && lt_prec) || (!ge_p && ge_prec);
}

/// Per-player pivot counts at one level, asserting pivot uniqueness.
inline std::vector<std::uint64_t> oracle_pivot_counts(const GameLadder& game, int level_i) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(game.players()), 0);
  for_each_allocation(game, [&](const OrderedAllocation& alloc) {
    int found = -1;
    for (int p = 0; p < game.players(); ++p) {
      if (oracle_is_pivotal(game, alloc, level_i, p)) {
        if (found >= 0) throw std::logic_error("oracle: two pivotal players");
        found = p;
      }
    }
    if (found < 0) throw std::logic_error("oracle: no pivotal player");
    ++counts[static_cast<std::size_t>(found)];
  });
  return counts;
}

/// Relabeled game f'(y) = f(x) with x_p = y_{pi(p)}, materialized as an
/// explicit table.
inline GameLadder relabel(const GameLadder& game, const std::vector<int>& pi) {
  int n = game.players();
  int j = game.levels();
  std::vector<double> outputs(game.profile_count());
  for_each_profile(n, j, [&](const Profile& y) {
    Profile x = y;
    for (int p = 0; p < n; ++p) x[p] = y[pi[static_cast<std::size_t>(p)]];
    outputs[encode_profile(y, j)] = game.evaluate(x);
  });
  return GameLadder(n, j, game.orientation(), ExplicitTable{std::move(outputs)});
}

}  // namespace test_support
