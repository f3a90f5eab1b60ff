#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ladder/enumeration.hpp"
#include "ladder/profile.hpp"

namespace ladder {

/// Direction in which the production function is monotone with respect to
/// the componentwise order on profiles.
enum class Orientation { NonDecreasing, NonIncreasing };

Orientation flipped(Orientation o);
const char* to_string(Orientation o);

/// j^n output values in canonical profile order.
struct ExplicitTable {
  std::vector<double> outputs;
};

/// f(x) = inside iff x <= g for some generator g, else outside.
/// Generators are normalized to an antichain on construction.
struct DownSetIndicator {
  std::vector<Profile> generators;
  double inside = 1.0;
  double outside = 0.0;
};

/// f(x) = inside iff x >= g for some generator g, else outside.
struct UpSetIndicator {
  std::vector<Profile> generators;
  double inside = 1.0;
  double outside = 0.0;
};

/// f(x) = values[i] for the smallest i with sum_p weights[p][x_p - 1] >=
/// thresholds[i]; values.back() when no threshold is met. Thresholds and
/// values are strictly decreasing and thresholds has one entry fewer than
/// values, so f is total.
struct WeightedMultiLevel {
  std::vector<std::vector<double>> weights;  // [player][level - 1]
  std::vector<double> thresholds;
  std::vector<double> values;
};

using Representation =
    std::variant<ExplicitTable, DownSetIndicator, UpSetIndicator, WeightedMultiLevel>;

/// A game ladder: n players, position types {1, .., j}, a declared
/// monotone orientation, and a production function given by one of four
/// representations. Immutable after construction; every operation on a
/// const GameLadder is safe to call concurrently.
class GameLadder {
public:
  GameLadder(int players, int levels, Orientation orientation, Representation rep);

  int players() const { return n_; }
  int levels() const { return j_; }
  Orientation orientation() const { return orientation_; }
  const Representation& representation() const { return rep_; }

  /// Number of profiles j^n. Throws EnumerationLimit against `cap`.
  std::uint64_t profile_count(std::uint64_t cap = kDefaultEnumCap) const;

  /// The production function. Throws DimensionMismatch on an invalid
  /// profile.
  double evaluate(const Profile& x) const;

  /// evaluate on the profile with the given canonical index.
  double evaluate_index(std::uint64_t index) const;

private:
  int n_;
  int j_;
  Orientation orientation_;
  Representation rep_;
};

/// The reversed-scale game g(x) = f(rev(x)) with the orientation flag
/// flipped. Involution up to representation normalization; evaluates on
/// rev(x) exactly as the source game on x.
GameLadder dualize(const GameLadder& game);

struct MonotoneReport {
  bool holds = false;
  /// A covering pair (x, z) with x <= z violating the declared
  /// orientation, when holds is false.
  std::optional<std::pair<Profile, Profile>> witness;
};

/// Checks the declared orientation over all covering pairs
/// (x, promote(x, p, x_p + 1)), which is equivalent to checking all
/// comparable pairs.
MonotoneReport validate_monotone(const GameLadder& game, std::uint64_t cap = kDefaultEnumCap);

/// The exact range of f, sorted strictly decreasing. Values closer than
/// the merge tolerance collapse into one level, represented by the
/// largest member.
class OutputLevels {
public:
  static constexpr double kMergeTolerance = 1e-9;

  /// Builds levels from an unsorted collection of output values.
  explicit OutputLevels(const std::vector<double>& raw_values);

  const std::vector<double>& values() const { return values_; }
  int count() const { return static_cast<int>(values_.size()); }

  /// z_i for 1-based i in [1, k].
  double at(int i) const;

  /// 1-based index of the level containing `value`. Throws
  /// InternalInconsistency when the value is not in the range of f.
  int level_of(double value) const;

private:
  std::vector<double> values_;  // representatives, strictly decreasing
  std::vector<double> lo_;      // smallest raw value merged into level
};

/// Sweeps all j^n profiles. Throws EnumerationLimit when j^n > cap.
OutputLevels output_levels(const GameLadder& game, std::uint64_t cap = kDefaultEnumCap);

/// Materialized per-profile outputs and level indices plus the
/// monotonicity verdict; the shared workhorse for relation and pivot
/// sweeps. Read-only after construction. Keeps a reference to the game,
/// which must outlive the table.
class LevelTable {
public:
  explicit LevelTable(const GameLadder& game, std::uint64_t cap = kDefaultEnumCap);

  const GameLadder& game() const { return *game_; }
  const OutputLevels& levels() const { return levels_; }
  double value_at(std::uint64_t index) const { return values_[index]; }
  /// 1-based level index of the output at the given profile index.
  int level_at(std::uint64_t index) const { return static_cast<int>(level_[index]); }
  const MonotoneReport& monotone() const { return monotone_; }

  /// Throws NotMonotone unless the declared orientation holds.
  void require_monotone() const;

private:
  const GameLadder* game_;
  std::vector<double> values_;
  OutputLevels levels_;
  std::vector<std::uint32_t> level_;
  MonotoneReport monotone_;
};

}  // namespace ladder
