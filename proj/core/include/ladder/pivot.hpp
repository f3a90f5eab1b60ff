#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ladder/game.hpp"
#include "ladder/influence.hpp"

namespace ladder {

/// Bijection from players onto entry ranks; rank 0 enters first.
class EntryOrder {
public:
  /// players_by_rank[r] is the player entering at rank r.
  explicit EntryOrder(std::vector<int> players_by_rank);
  static EntryOrder identity(int n);
  static EntryOrder from_rank(std::uint64_t rank, int n);

  int size() const { return static_cast<int>(seq_.size()); }
  int player_at_rank(int rank) const { return seq_[static_cast<std::size_t>(rank)]; }
  int rank_of(int player) const { return rank_[static_cast<std::size_t>(player)]; }
  const std::vector<int>& players_by_rank() const { return seq_; }

  /// The player entering right before p; nullopt for the first entrant.
  std::optional<int> predecessor(int player) const;

  /// Lexicographic rank of the underlying permutation.
  std::uint64_t rank() const;

  friend bool operator==(const EntryOrder&, const EntryOrder&) = default;

private:
  std::vector<int> seq_;
  std::vector<int> rank_;
};

/// The unit of pivot counting: an entry order together with a full
/// position profile.
struct OrderedAllocation {
  EntryOrder order;
  Profile profile;

  void require_valid(const GameLadder& game) const;
  friend bool operator==(const OrderedAllocation&, const OrderedAllocation&) = default;
};

enum class PrefixEnd { Top, Bottom };

/// Keeps the positions of p and of everyone entering before p, and sends
/// every later entrant to position j (Top) or 1 (Bottom).
Profile prefix_extreme(const GameLadder& game, const OrderedAllocation& alloc, int p,
                       PrefixEnd end);

/// Ground-truth pivot test: enumerates every allocation agreeing with R up
/// to p (and up to p's predecessor) and evaluates the two defining
/// condition pairs directly. Valid for any game; level_i is 1-based and
/// must lie in [1, k-1].
bool is_pivotal_bruteforce(const LevelTable& table, const OrderedAllocation& alloc,
                           int level_i, int p);
bool is_pivotal_bruteforce(const GameLadder& game, const OrderedAllocation& alloc,
                           int level_i, int p);

/// Four-point pivot test through the prefix extremes. Requires the
/// declared orientation to hold; each orientation uses its matching form
/// (the top-first branches for non-increasing games, the mirrored
/// bottom-first branches for non-decreasing ones). Agrees with the
/// brute-force test on every monotone game; the test suite enforces this.
bool is_pivotal_extremes(const LevelTable& table, const OrderedAllocation& alloc,
                         int level_i, int p);
bool is_pivotal_extremes(const GameLadder& game, const OrderedAllocation& alloc,
                         int level_i, int p);

/// The unique pivotal player of the allocation. Scans players in entry
/// order and throws PivotContractViolation if no player or more than one
/// player passes the extremes test.
int find_pivotal(const LevelTable& table, const OrderedAllocation& alloc, int level_i);
int find_pivotal(const GameLadder& game, const OrderedAllocation& alloc, int level_i);

struct PivotOptions {
  int threads = 1;
  std::uint64_t cap = kDefaultEnumCap;
  /// Restrict counting to one 1-based level index; all of 1..k-1 otherwise.
  std::optional<int> level;
};

/// Per-level, per-player pivot counts over all n! * j^n ordered
/// allocations.
struct PivotTable {
  std::vector<double> level_values;               // z_1 .. z_k
  std::vector<int> level_indices;                 // the counted i, ascending
  std::vector<std::vector<std::uint64_t>> counts; // [row][player]
  std::uint64_t total_per_level = 0;              // n! * j^n
  std::vector<std::uint64_t> per_player_total;    // column sums over rows

  const std::vector<std::uint64_t>& counts_for(int level_i) const;
};

/// Exact enumeration; deterministic for every thread count. Throws
/// DegenerateRange when the game has a single output value and
/// EnumerationLimit when n! * j^n exceeds the cap.
PivotTable pivot_counts(const GameLadder& game, const PivotOptions& options = {});

struct Theorem2Violation {
  int p = 0;
  int q = 0;
  int level_i = 0;
  std::uint64_t count_p = 0;
  std::uint64_t count_q = 0;
};

/// Count monotonicity across the influence relation: for every ordered
/// pair with p >= q and every counted level, compare |pivots of p| with
/// |pivots of q|. `as_stated` holds when counts never decrease along
/// dominance; `reversed` evaluates the opposite hypothesis.
struct Theorem2Report {
  std::uint64_t pairs_checked = 0;
  bool as_stated = true;
  bool reversed = true;
  std::vector<Theorem2Violation> violations;
  std::vector<Theorem2Violation> reversed_violations;
};

Theorem2Report theorem2_check(const RelationMatrix& relation, const PivotTable& table);
Theorem2Report theorem2_check(const GameLadder& game, const PivotOptions& options = {});

/// Which world the pivot machinery runs in. Canonical moves
/// non-increasing games to their reversed-scale dual, where the
/// characterization and the count-monotonicity statement are coherent;
/// printed analyses the game exactly as given.
enum class PivotConfig { Canonical, Printed };

const char* to_string(PivotConfig c);

/// The game to analyze under the chosen configuration. Sets *dualized
/// when a reversed-scale bridge was applied.
GameLadder configured_game(const GameLadder& game, PivotConfig config,
                           bool* dualized = nullptr);

}  // namespace ladder
