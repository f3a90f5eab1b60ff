#include "ladder/pivot.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace ladder {

EntryOrder::EntryOrder(std::vector<int> players_by_rank) : seq_(std::move(players_by_rank)) {
  int n = static_cast<int>(seq_.size());
  rank_.assign(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    int p = seq_[static_cast<std::size_t>(r)];
    if (p < 0 || p >= n || rank_[static_cast<std::size_t>(p)] != -1) {
      throw DimensionMismatch("entry order is not a bijection onto ranks");
    }
    rank_[static_cast<std::size_t>(p)] = r;
  }
}

EntryOrder EntryOrder::identity(int n) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) seq[static_cast<std::size_t>(p)] = p;
  return EntryOrder(std::move(seq));
}

EntryOrder EntryOrder::from_rank(std::uint64_t rank, int n) {
  return EntryOrder(permutation_from_rank(rank, n));
}

std::optional<int> EntryOrder::predecessor(int player) const {
  int r = rank_of(player);
  if (r == 0) return std::nullopt;
  return player_at_rank(r - 1);
}

std::uint64_t EntryOrder::rank() const { return permutation_rank(seq_); }

void OrderedAllocation::require_valid(const GameLadder& game) const {
  if (order.size() != game.players()) {
    throw DimensionMismatch("entry order covers " + std::to_string(order.size()) +
                            " players, game has " + std::to_string(game.players()));
  }
  profile.require_valid(game.players(), game.levels());
}

Profile prefix_extreme(const GameLadder& game, const OrderedAllocation& alloc, int p,
                       PrefixEnd end) {
  alloc.require_valid(game);
  if (p < 0 || p >= game.players()) {
    throw DimensionMismatch("player outside [1, " + std::to_string(game.players()) + "]");
  }
  Pos fill = end == PrefixEnd::Top ? game.levels() : 1;
  int rp = alloc.order.rank_of(p);
  Profile result = alloc.profile;
  for (int a = 0; a < game.players(); ++a) {
    if (alloc.order.rank_of(a) > rp) result[a] = fill;
  }
  return result;
}

namespace {

void require_level(const LevelTable& table, int level_i) {
  int k = table.levels().count();
  if (level_i < 1 || level_i > k - 1) {
    throw LevelOutOfRange("level " + std::to_string(level_i) + " outside [1, " +
                          std::to_string(k - 1) + "]");
  }
}

std::string describe(const OrderedAllocation& alloc) {
  std::ostringstream os;
  os << "order (";
  for (int r = 0; r < alloc.order.size(); ++r) {
    os << (r ? "," : "") << alloc.order.player_at_rank(r) + 1;
  }
  os << ") profile (";
  for (int p = 0; p < alloc.profile.size(); ++p) {
    os << (p ? "," : "") << alloc.profile[p];
  }
  os << ")";
  return os.str();
}

// Scans every completion of the allocations agreeing with `alloc` up to
// the player at rank `prefix_ranks - 1`; reports whether some completion
// lands strictly below z_i and whether some lands at or above it.
void scan_agreement_set(const LevelTable& table, const OrderedAllocation& alloc,
                        int prefix_ranks, int level_i, bool& any_below, bool& any_at_or_above) {
  const GameLadder& game = table.game();
  int n = game.players();
  int j = game.levels();
  std::vector<int> later;
  for (int r = prefix_ranks; r < n; ++r) later.push_back(alloc.order.player_at_rank(r));
  Profile x = alloc.profile;
  for (int p : later) x[p] = 1;
  any_below = false;
  any_at_or_above = false;
  while (true) {
    int level = table.level_at(encode_profile(x, j));
    if (level > level_i) any_below = true;
    if (level <= level_i) any_at_or_above = true;
    if (any_below && any_at_or_above) return;
    // odometer over the later players only
    std::size_t d = 0;
    for (; d < later.size(); ++d) {
      int p = later[d];
      if (x[p] < j) {
        ++x[p];
        break;
      }
      x[p] = 1;
    }
    if (d == later.size()) return;
  }
}

}  // namespace

bool is_pivotal_bruteforce(const LevelTable& table, const OrderedAllocation& alloc,
                           int level_i, int p) {
  alloc.require_valid(table.game());
  require_level(table, level_i);
  int rp = alloc.order.rank_of(p);

  bool below_p = false;
  bool at_or_above_p = false;
  scan_agreement_set(table, alloc, rp + 1, level_i, below_p, at_or_above_p);
  bool clinches_high = !below_p;
  bool clinches_low = !at_or_above_p;
  if (rp == 0) return clinches_high || clinches_low;

  bool below_prec = false;
  bool at_or_above_prec = false;
  scan_agreement_set(table, alloc, rp, level_i, below_prec, at_or_above_prec);
  return (clinches_high && below_prec) || (clinches_low && at_or_above_prec);
}

bool is_pivotal_bruteforce(const GameLadder& game, const OrderedAllocation& alloc,
                           int level_i, int p) {
  return is_pivotal_bruteforce(LevelTable(game), alloc, level_i, p);
}

bool is_pivotal_extremes(const LevelTable& table, const OrderedAllocation& alloc,
                         int level_i, int p) {
  table.require_monotone();
  alloc.require_valid(table.game());
  require_level(table, level_i);
  const GameLadder& game = table.game();
  int j = game.levels();

  Profile bottom = prefix_extreme(game, alloc, p, PrefixEnd::Bottom);
  Profile top = prefix_extreme(game, alloc, p, PrefixEnd::Top);
  int li_bottom = table.level_at(encode_profile(bottom, j));
  int li_top = table.level_at(encode_profile(top, j));
  int li_bottom_p = table.level_at(encode_profile(promote(bottom, p, 1, j), j));
  int li_top_p = table.level_at(encode_profile(promote(top, p, j, j), j));

  if (game.orientation() == Orientation::NonIncreasing) {
    // Verbatim top-first form.
    bool securer = li_top <= level_i && li_top_p > level_i;
    bool blocker = li_bottom > level_i && li_bottom_p <= level_i;
    return securer || blocker;
  }
  // Mirrored form: the bottom extreme is the output minimizer here.
  bool securer = li_bottom <= level_i && li_bottom_p > level_i;
  bool blocker = li_top > level_i && li_top_p <= level_i;
  return securer || blocker;
}

bool is_pivotal_extremes(const GameLadder& game, const OrderedAllocation& alloc,
                         int level_i, int p) {
  return is_pivotal_extremes(LevelTable(game), alloc, level_i, p);
}

int find_pivotal(const LevelTable& table, const OrderedAllocation& alloc, int level_i) {
  int found = -1;
  for (int r = 0; r < alloc.order.size(); ++r) {
    int p = alloc.order.player_at_rank(r);
    if (is_pivotal_extremes(table, alloc, level_i, p)) {
      if (found >= 0) {
        throw PivotContractViolation(PivotContractViolation::Kind::MultiplePivots,
                                     "players " + std::to_string(found + 1) + " and " +
                                         std::to_string(p + 1) + " at level " +
                                         std::to_string(level_i) + ", " + describe(alloc));
      }
      found = p;
    }
  }
  if (found < 0) {
    throw PivotContractViolation(PivotContractViolation::Kind::NoPivot,
                                 "level " + std::to_string(level_i) + ", " + describe(alloc));
  }
  return found;
}

int find_pivotal(const GameLadder& game, const OrderedAllocation& alloc, int level_i) {
  return find_pivotal(LevelTable(game), alloc, level_i);
}

const std::vector<std::uint64_t>& PivotTable::counts_for(int level_i) const {
  for (std::size_t row = 0; row < level_indices.size(); ++row) {
    if (level_indices[row] == level_i) return counts[row];
  }
  throw LevelOutOfRange("level " + std::to_string(level_i) + " was not counted");
}

PivotTable pivot_counts(const GameLadder& game, const PivotOptions& options) {
  LevelTable table(game, options.cap);
  table.require_monotone();
  int k = table.levels().count();
  if (k < 2) {
    throw DegenerateRange("game has a single output value; no pivot levels exist");
  }
  int n = game.players();
  int j = game.levels();
  std::uint64_t profiles = game.profile_count(options.cap);
  std::uint64_t orders = checked_factorial(n, options.cap);
  if (orders > options.cap / profiles) {
    throw EnumerationLimit(options.cap + 1, options.cap);
  }
  std::uint64_t total = orders * profiles;

  std::vector<int> wanted;
  if (options.level) {
    require_level(table, *options.level);
    wanted.push_back(*options.level);
  } else {
    for (int i = 1; i <= k - 1; ++i) wanted.push_back(i);
  }
  std::size_t rows = wanted.size();

  bool reversed = game.orientation() == Orientation::NonIncreasing;
  std::vector<std::uint64_t> pow(static_cast<std::size_t>(n));
  {
    std::uint64_t w = 1;
    for (int p = 0; p < n; ++p) {
      pow[static_cast<std::size_t>(p)] = w;
      w *= static_cast<std::uint64_t>(j);
    }
  }

  int threads = options.threads < 1 ? 1 : options.threads;
  std::vector<std::vector<std::uint64_t>> worker_counts(
      static_cast<std::size_t>(threads),
      std::vector<std::uint64_t>(rows * static_cast<std::size_t>(n), 0));

  parallel_blocks(orders, threads, [&](int worker, std::uint64_t begin, std::uint64_t end) {
    auto& local = worker_counts[static_cast<std::size_t>(worker)];
    std::vector<std::uint64_t> tail_top(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> lo_li(static_cast<std::size_t>(n) + 1), hi_li(static_cast<std::size_t>(n) + 1);
    std::vector<Pos> digits(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> contrib(static_cast<std::size_t>(n));

    for (std::uint64_t rank = begin; rank < end; ++rank) {
      std::vector<int> seq = permutation_from_rank(rank, n);
      tail_top[static_cast<std::size_t>(n)] = 0;
      for (int m = n - 1; m >= 0; --m) {
        tail_top[static_cast<std::size_t>(m)] =
            tail_top[static_cast<std::size_t>(m + 1)] +
            static_cast<std::uint64_t>(j - 1) * pow[static_cast<std::size_t>(seq[static_cast<std::size_t>(m)])];
      }
      std::fill(digits.begin(), digits.end(), 1);
      std::fill(contrib.begin(), contrib.end(), 0);

      for (std::uint64_t pi = 0; pi < profiles; ++pi) {
        // Level indices of the two prefix extremes, prefix length 1..n.
        std::uint64_t prefix = 0;
        for (int m = 1; m <= n; ++m) {
          int player = seq[static_cast<std::size_t>(m - 1)];
          prefix += contrib[static_cast<std::size_t>(player)];
          std::uint64_t bottom = prefix;
          std::uint64_t top = prefix + tail_top[static_cast<std::size_t>(m)];
          int li_bottom = table.level_at(bottom);
          int li_top = table.level_at(top);
          lo_li[static_cast<std::size_t>(m)] = reversed ? li_top : li_bottom;
          hi_li[static_cast<std::size_t>(m)] = reversed ? li_bottom : li_top;
        }
        for (std::size_t row = 0; row < rows; ++row) {
          int i = wanted[row];
          for (int m = 1; m <= n; ++m) {
            if (lo_li[static_cast<std::size_t>(m)] <= i ||
                hi_li[static_cast<std::size_t>(m)] > i) {
              int player = seq[static_cast<std::size_t>(m - 1)];
              ++local[row * static_cast<std::size_t>(n) + static_cast<std::size_t>(player)];
              break;
            }
          }
        }
        // canonical odometer with cached digit contributions
        for (int p = 0; p < n; ++p) {
          if (digits[static_cast<std::size_t>(p)] < j) {
            ++digits[static_cast<std::size_t>(p)];
            contrib[static_cast<std::size_t>(p)] += pow[static_cast<std::size_t>(p)];
            break;
          }
          digits[static_cast<std::size_t>(p)] = 1;
          contrib[static_cast<std::size_t>(p)] = 0;
        }
      }
    }
  });

  PivotTable result;
  result.level_values = table.levels().values();
  result.level_indices = wanted;
  result.counts.assign(rows, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  for (const auto& local : worker_counts) {
    for (std::size_t row = 0; row < rows; ++row) {
      for (int p = 0; p < n; ++p) {
        result.counts[row][static_cast<std::size_t>(p)] +=
            local[row * static_cast<std::size_t>(n) + static_cast<std::size_t>(p)];
      }
    }
  }
  result.total_per_level = total;
  result.per_player_total.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t row = 0; row < rows; ++row) {
    std::uint64_t sum = 0;
    for (int p = 0; p < n; ++p) {
      sum += result.counts[row][static_cast<std::size_t>(p)];
      result.per_player_total[static_cast<std::size_t>(p)] +=
          result.counts[row][static_cast<std::size_t>(p)];
    }
    if (sum != total) {
      throw InternalInconsistency("pivot counts at level " +
                                  std::to_string(wanted[row]) + " sum to " +
                                  std::to_string(sum) + ", expected " + std::to_string(total));
    }
  }
  return result;
}

Theorem2Report theorem2_check(const RelationMatrix& relation, const PivotTable& table) {
  Theorem2Report report;
  int n = relation.players();
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q || !relation.geq(p, q)) continue;
      for (std::size_t row = 0; row < table.level_indices.size(); ++row) {
        ++report.pairs_checked;
        std::uint64_t cp = table.counts[row][static_cast<std::size_t>(p)];
        std::uint64_t cq = table.counts[row][static_cast<std::size_t>(q)];
        if (cp < cq) {
          report.violations.push_back({p, q, table.level_indices[row], cp, cq});
        }
        if (cp > cq) {
          report.reversed_violations.push_back({p, q, table.level_indices[row], cp, cq});
        }
      }
    }
  }
  report.as_stated = report.violations.empty();
  report.reversed = report.reversed_violations.empty();
  return report;
}

Theorem2Report theorem2_check(const GameLadder& game, const PivotOptions& options) {
  RelationOptions relation_options;
  relation_options.threads = options.threads;
  relation_options.cap = options.cap;
  RelationMatrix relation = relation_matrix(game, relation_options);
  PivotTable table = pivot_counts(game, options);
  return theorem2_check(relation, table);
}

const char* to_string(PivotConfig c) {
  return c == PivotConfig::Canonical ? "canonical" : "printed";
}

GameLadder configured_game(const GameLadder& game, PivotConfig config, bool* dualized) {
  bool bridge = config == PivotConfig::Canonical &&
                game.orientation() == Orientation::NonIncreasing;
  if (dualized) *dualized = bridge;
  return bridge ? dualize(game) : game;
}

}  // namespace ladder
