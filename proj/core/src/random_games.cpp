#include "ladder/random_games.hpp"

#include <algorithm>
#include <vector>

namespace ladder {

namespace {

// splitmix64; self-contained so draws never depend on libstdc++
// distribution internals.
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // inclusive bounds; modulo bias is irrelevant at these ranges
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

enum class Kind { DownSet, UpSet, Weighted, SortedWeighted, Explicit };

std::vector<Profile> draw_generators(Rng& rng, int n, int j) {
  int count = rng.uniform(1, 3);
  std::vector<Profile> generators;
  for (int g = 0; g < count; ++g) {
    Profile x = Profile::filled(n, 1);
    for (int p = 0; p < n; ++p) x[p] = rng.uniform(1, j);
    generators.push_back(std::move(x));
  }
  return generators;
}

GameLadder draw_indicator(Rng& rng, int n, int j, bool downset) {
  auto generators = draw_generators(rng, n, j);
  if (downset) {
    return GameLadder(n, j, Orientation::NonIncreasing,
                      DownSetIndicator{std::move(generators)});
  }
  return GameLadder(n, j, Orientation::NonDecreasing, UpSetIndicator{std::move(generators)});
}

GameLadder draw_weighted(Rng& rng, int n, int j, int max_values, bool sorted,
                         std::optional<Orientation> forced) {
  Orientation o = forced ? *forced
                         : (rng.uniform(0, 1) == 0 ? Orientation::NonDecreasing
                                                   : Orientation::NonIncreasing);
  WeightedMultiLevel w;
  w.weights.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(j), 0));

  if (sorted) {
    // Shared per-level increments scaled by a per-player multiplier that
    // falls with the player index, so every pair of players is comparable
    // and the game is linear.
    std::vector<int> step(static_cast<std::size_t>(j), 0);
    for (int t = 1; t < j; ++t) step[static_cast<std::size_t>(t)] = rng.uniform(0, 4);
    std::vector<int> scale(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) scale[static_cast<std::size_t>(p)] = rng.uniform(0, 4);
    std::sort(scale.begin(), scale.end(), std::greater<>());
    for (int p = 0; p < n; ++p) {
      double base = rng.uniform(0, 4);
      double value = base;
      for (int t = 0; t < j; ++t) {
        if (t > 0) {
          double delta = scale[static_cast<std::size_t>(p)] * step[static_cast<std::size_t>(t)];
          value += o == Orientation::NonDecreasing ? delta : -delta;
        }
        w.weights[static_cast<std::size_t>(p)][static_cast<std::size_t>(t)] = value;
      }
    }
  } else {
    for (int p = 0; p < n; ++p) {
      std::vector<int> row(static_cast<std::size_t>(j));
      for (int t = 0; t < j; ++t) row[static_cast<std::size_t>(t)] = rng.uniform(0, 9);
      std::sort(row.begin(), row.end());
      if (o == Orientation::NonIncreasing) std::reverse(row.begin(), row.end());
      for (int t = 0; t < j; ++t) {
        w.weights[static_cast<std::size_t>(p)][static_cast<std::size_t>(t)] = row[static_cast<std::size_t>(t)];
      }
    }
  }

  double lo = 0;
  double hi = 0;
  for (int p = 0; p < n; ++p) {
    const auto& row = w.weights[static_cast<std::size_t>(p)];
    lo += *std::min_element(row.begin(), row.end());
    hi += *std::max_element(row.begin(), row.end());
  }
  int k = rng.uniform(2, max_values);
  for (int i = k - 1; i >= 1; --i) {
    // Spread thresholds over the reachable sums, jittered; duplicates are
    // harmless because unattained values simply drop out of the range.
    double frac = static_cast<double>(i) / k;
    double jitter = rng.uniform(-10, 10) / 100.0 / k;
    w.thresholds.push_back(lo + (hi - lo) * std::clamp(frac + jitter, 0.05, 0.999));
  }
  std::sort(w.thresholds.begin(), w.thresholds.end(), std::greater<>());
  w.thresholds.erase(std::unique(w.thresholds.begin(), w.thresholds.end()), w.thresholds.end());
  for (std::size_t i = 0; i <= w.thresholds.size(); ++i) {
    w.values.push_back(static_cast<double>(w.thresholds.size() - i));
  }
  return GameLadder(n, j, o, std::move(w));
}

GameLadder draw_explicit(Rng& rng, int n, int j, int max_values) {
  std::uint64_t count = checked_pow(static_cast<std::uint64_t>(j), n, kDefaultEnumCap);
  ExplicitTable table;
  table.outputs.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    table.outputs.push_back(rng.uniform(0, max_values - 1));
  }
  Orientation o = rng.uniform(0, 1) == 0 ? Orientation::NonDecreasing
                                         : Orientation::NonIncreasing;
  return GameLadder(n, j, o, std::move(table));
}

}  // namespace

GameLadder random_game(std::uint64_t seed, std::uint64_t index, const RandomGameSpec& spec) {
  std::vector<Kind> kinds;
  bool down_ok = !spec.orientation || *spec.orientation == Orientation::NonIncreasing;
  bool up_ok = !spec.orientation || *spec.orientation == Orientation::NonDecreasing;
  if (down_ok) kinds.push_back(Kind::DownSet);
  if (up_ok) kinds.push_back(Kind::UpSet);
  kinds.push_back(Kind::Weighted);
  kinds.push_back(Kind::SortedWeighted);
  if (!spec.monotone_only && !spec.orientation) kinds.push_back(Kind::Explicit);

  Rng rng{seed * 0x9e3779b97f4a7c15ULL + index * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL};
  Kind kind = kinds[static_cast<std::size_t>(index % kinds.size())];

  for (int attempt = 0; attempt < 64; ++attempt) {
    int n = rng.uniform(spec.min_players, spec.max_players);
    int j = rng.uniform(spec.min_levels, spec.max_levels);
    GameLadder game = [&] {
      switch (kind) {
        case Kind::DownSet: return draw_indicator(rng, n, j, true);
        case Kind::UpSet: return draw_indicator(rng, n, j, false);
        case Kind::Weighted: return draw_weighted(rng, n, j, spec.max_values, false, spec.orientation);
        case Kind::SortedWeighted:
          return draw_weighted(rng, n, j, spec.max_values, true, spec.orientation);
        case Kind::Explicit: return draw_explicit(rng, n, j, spec.max_values);
      }
      return draw_indicator(rng, n, j, true);
    }();
    if (output_levels(game).count() >= 2) return game;
  }
  // Draws kept collapsing to a constant function; this cannot.
  int n = spec.min_players;
  int j = spec.min_levels;
  UpSetIndicator rep;
  rep.generators = {Profile::filled(n, j)};
  Orientation o = spec.orientation.value_or(Orientation::NonDecreasing);
  if (o == Orientation::NonIncreasing) {
    DownSetIndicator down;
    down.generators = {Profile::filled(n, 1)};
    return GameLadder(n, j, o, std::move(down));
  }
  return GameLadder(n, j, o, std::move(rep));
}

}  // namespace ladder
