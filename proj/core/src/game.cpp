#include "ladder/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ladder {

Orientation flipped(Orientation o) {
  return o == Orientation::NonDecreasing ? Orientation::NonIncreasing
                                         : Orientation::NonDecreasing;
}

const char* to_string(Orientation o) {
  return o == Orientation::NonDecreasing ? "non_decreasing" : "non_increasing";
}

namespace {

// Drops generators made redundant by another generator and sorts the rest
// by canonical index, so equal games load to equal representations.
void normalize_antichain(std::vector<Profile>& generators, int j, bool downset) {
  std::vector<Profile> kept;
  for (std::size_t a = 0; a < generators.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < generators.size() && !redundant; ++b) {
      if (a == b) continue;
      const Profile& ga = generators[a];
      const Profile& gb = generators[b];
      if (downset ? ga.leq(gb) : gb.leq(ga)) {
        // Ties survive once: the earlier duplicate wins.
        redundant = ga != gb || b < a;
      }
    }
    if (!redundant) kept.push_back(generators[a]);
  }
  std::sort(kept.begin(), kept.end(), [j](const Profile& a, const Profile& b) {
    return encode_profile(a, j) < encode_profile(b, j);
  });
  generators = std::move(kept);
}

}  // namespace

GameLadder::GameLadder(int players, int levels, Orientation orientation, Representation rep)
    : n_(players), j_(levels), orientation_(orientation), rep_(std::move(rep)) {
  if (n_ < 1) throw DimensionMismatch("player count must be >= 1");
  if (j_ < 2) throw DimensionMismatch("level count must be >= 2");

  if (auto* table = std::get_if<ExplicitTable>(&rep_)) {
    std::uint64_t want = checked_pow(static_cast<std::uint64_t>(j_), n_, kDefaultEnumCap);
    if (table->outputs.size() != want) {
      throw DimensionMismatch("explicit table has " + std::to_string(table->outputs.size()) +
                              " entries, expected " + std::to_string(want));
    }
  } else if (auto* down = std::get_if<DownSetIndicator>(&rep_)) {
    if (down->generators.empty()) throw DimensionMismatch("down-set game needs a generator");
    for (const Profile& g : down->generators) g.require_valid(n_, j_);
    normalize_antichain(down->generators, j_, /*downset=*/true);
  } else if (auto* up = std::get_if<UpSetIndicator>(&rep_)) {
    if (up->generators.empty()) throw DimensionMismatch("up-set game needs a generator");
    for (const Profile& g : up->generators) g.require_valid(n_, j_);
    normalize_antichain(up->generators, j_, /*downset=*/false);
  } else if (auto* w = std::get_if<WeightedMultiLevel>(&rep_)) {
    if (static_cast<int>(w->weights.size()) != n_) {
      throw DimensionMismatch("weight matrix needs one row per player");
    }
    for (const auto& row : w->weights) {
      if (static_cast<int>(row.size()) != j_) {
        throw DimensionMismatch("weight row needs one entry per level");
      }
    }
    if (w->values.empty()) throw DimensionMismatch("weighted game needs at least one value");
    if (w->thresholds.size() + 1 != w->values.size()) {
      throw DimensionMismatch("weighted game needs exactly one threshold per value above the bottom");
    }
    for (std::size_t i = 0; i + 1 < w->values.size(); ++i) {
      if (!(w->values[i] > w->values[i + 1])) {
        throw DimensionMismatch("values must be strictly decreasing");
      }
    }
    for (std::size_t i = 0; i + 1 < w->thresholds.size(); ++i) {
      if (!(w->thresholds[i] > w->thresholds[i + 1])) {
        throw DimensionMismatch("thresholds must be strictly decreasing");
      }
    }
  }
}

std::uint64_t GameLadder::profile_count(std::uint64_t cap) const {
  return checked_pow(static_cast<std::uint64_t>(j_), n_, cap);
}

double GameLadder::evaluate(const Profile& x) const {
  x.require_valid(n_, j_);
  if (const auto* table = std::get_if<ExplicitTable>(&rep_)) {
    return table->outputs[encode_profile(x, j_)];
  }
  if (const auto* down = std::get_if<DownSetIndicator>(&rep_)) {
    for (const Profile& g : down->generators) {
      if (x.leq(g)) return down->inside;
    }
    return down->outside;
  }
  if (const auto* up = std::get_if<UpSetIndicator>(&rep_)) {
    for (const Profile& g : up->generators) {
      if (g.leq(x)) return up->inside;
    }
    return up->outside;
  }
  const auto& w = std::get<WeightedMultiLevel>(rep_);
  double sum = 0.0;
  for (int p = 0; p < n_; ++p) {
    sum += w.weights[static_cast<std::size_t>(p)][static_cast<std::size_t>(x[p] - 1)];
  }
  for (std::size_t i = 0; i < w.thresholds.size(); ++i) {
    if (sum >= w.thresholds[i]) return w.values[i];
  }
  return w.values.back();
}

double GameLadder::evaluate_index(std::uint64_t index) const {
  if (const auto* table = std::get_if<ExplicitTable>(&rep_)) {
    return table->outputs[index];
  }
  return evaluate(decode_profile(index, n_, j_));
}

GameLadder dualize(const GameLadder& game) {
  int n = game.players();
  int j = game.levels();
  Orientation o = flipped(game.orientation());
  const Representation& rep = game.representation();

  if (const auto* table = std::get_if<ExplicitTable>(&rep)) {
    std::uint64_t count = game.profile_count();
    std::vector<double> outputs(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Profile x = decode_profile(idx, n, j);
      outputs[idx] = table->outputs[encode_profile(reverse_scale(x, j), j)];
    }
    return GameLadder(n, j, o, ExplicitTable{std::move(outputs)});
  }
  if (const auto* down = std::get_if<DownSetIndicator>(&rep)) {
    UpSetIndicator up;
    up.inside = down->inside;
    up.outside = down->outside;
    for (const Profile& g : down->generators) up.generators.push_back(reverse_scale(g, j));
    return GameLadder(n, j, o, std::move(up));
  }
  if (const auto* up = std::get_if<UpSetIndicator>(&rep)) {
    DownSetIndicator down;
    down.inside = up->inside;
    down.outside = up->outside;
    for (const Profile& g : up->generators) down.generators.push_back(reverse_scale(g, j));
    return GameLadder(n, j, o, std::move(down));
  }
  WeightedMultiLevel w = std::get<WeightedMultiLevel>(rep);
  for (auto& row : w.weights) std::reverse(row.begin(), row.end());
  return GameLadder(n, j, o, std::move(w));
}

MonotoneReport validate_monotone(const GameLadder& game, std::uint64_t cap) {
  return LevelTable(game, cap).monotone();
}

OutputLevels::OutputLevels(const std::vector<double>& raw_values) {
  std::vector<double> sorted = raw_values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (double v : sorted) {
    if (values_.empty() || lo_.back() - v > kMergeTolerance) {
      values_.push_back(v);
      lo_.push_back(v);
    } else {
      lo_.back() = v;
    }
  }
}

double OutputLevels::at(int i) const {
  if (i < 1 || i > count()) {
    throw LevelOutOfRange("level " + std::to_string(i) + " outside [1, " +
                          std::to_string(count()) + "]");
  }
  return values_[static_cast<std::size_t>(i - 1)];
}

int OutputLevels::level_of(double value) const {
  // values_ is strictly decreasing; find the first level whose merged
  // cluster reaches down to the query.
  auto it = std::partition_point(values_.begin(), values_.end(),
                                 [&](double v) { return v > value + kMergeTolerance; });
  auto idx = static_cast<std::size_t>(it - values_.begin());
  if (idx < values_.size() && value >= lo_[idx] - kMergeTolerance &&
      value <= values_[idx] + kMergeTolerance) {
    return static_cast<int>(idx) + 1;
  }
  throw InternalInconsistency("output value " + std::to_string(value) +
                              " is not in the computed range");
}

OutputLevels output_levels(const GameLadder& game, std::uint64_t cap) {
  std::uint64_t count = game.profile_count(cap);
  std::vector<double> raw;
  raw.reserve(static_cast<std::size_t>(count));
  std::vector<Pos> digits(static_cast<std::size_t>(game.players()), 1);
  Profile x(digits);
  do {
    raw.push_back(game.evaluate(x));
  } while (next_profile(x, game.levels()));
  return OutputLevels(raw);
}

LevelTable::LevelTable(const GameLadder& game, std::uint64_t cap)
    : game_(&game),
      values_([&] {
        std::uint64_t count = game.profile_count(cap);
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(count));
        std::vector<Pos> digits(static_cast<std::size_t>(game.players()), 1);
        Profile x(digits);
        do {
          values.push_back(game.evaluate(x));
        } while (next_profile(x, game.levels()));
        return values;
      }()),
      levels_(values_) {
  level_.resize(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    level_[i] = static_cast<std::uint32_t>(levels_.level_of(values_[i]));
  }

  // Covering-pair sweep for the declared orientation.
  int n = game.players();
  int j = game.levels();
  monotone_.holds = true;
  std::uint64_t weight = 1;
  std::vector<std::uint64_t> pow(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    pow[static_cast<std::size_t>(p)] = weight;
    weight *= static_cast<std::uint64_t>(j);
  }
  std::vector<Pos> digits(static_cast<std::size_t>(n), 1);
  std::uint64_t idx = 0;
  do {
    for (int p = 0; p < n && monotone_.holds; ++p) {
      if (digits[static_cast<std::size_t>(p)] == j) continue;
      std::uint64_t above = idx + pow[static_cast<std::size_t>(p)];
      double fx = values_[idx];
      double fz = values_[above];
      bool ok = game.orientation() == Orientation::NonDecreasing ? fx <= fz : fx >= fz;
      if (!ok) {
        monotone_.holds = false;
        Profile x(digits);
        monotone_.witness = {x, promote(x, p, digits[static_cast<std::size_t>(p)] + 1, j)};
      }
    }
    ++idx;
  } while (monotone_.holds && next_profile(digits, j));
}

void LevelTable::require_monotone() const {
  if (!monotone_.holds) {
    throw NotMonotone("game is not " + std::string(to_string(game_->orientation())) +
                      " as declared");
  }
}

}  // namespace ladder
