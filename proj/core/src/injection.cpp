#include "ladder/injection.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ladder {

const char* to_string(PivotClass c) {
  switch (c) {
    case PivotClass::Securer: return "securer";
    case PivotClass::Blocker: return "blocker";
    case PivotClass::None: return "none";
  }
  return "?";
}

namespace {

void require_pair(const OrderedAllocation& alloc, int p, int q) {
  int n = alloc.order.size();
  if (p < 0 || p >= n || q < 0 || q >= n) {
    throw DimensionMismatch("player outside [1, " + std::to_string(n) + "]");
  }
  if (p == q) throw DimensionMismatch("players must be distinct");
}

std::vector<int> with_ranks_swapped(const EntryOrder& order, int p, int q) {
  std::vector<int> seq = order.players_by_rank();
  std::swap(seq[static_cast<std::size_t>(order.rank_of(p))],
            seq[static_cast<std::size_t>(order.rank_of(q))]);
  return seq;
}

// The position-swapped variant (sR, x + (x_p - x_q)e^q + (x_q - x_p)e^p)
// used by the D-set conditions; the entry order stays put.
OrderedAllocation swap_positions_only(const OrderedAllocation& alloc, int p, int q) {
  Profile x = alloc.profile;
  std::swap(x[p], x[q]);
  return OrderedAllocation{alloc.order, std::move(x)};
}

// Whether p occupies the strictly stronger slot of the two, where strong
// means the output-raising end of the position scale. The D-sets and the
// correspondence key on this comparison, so their branches transport
// between the two orientations exactly like the extremes forms do.
bool p_at_stronger_slot(const GameLadder& game, Pos xp, Pos xq) {
  return game.orientation() == Orientation::NonIncreasing ? xp < xq : xp > xq;
}

}  // namespace

OrderedAllocation swap_full(const OrderedAllocation& alloc, int p, int q) {
  require_pair(alloc, p, q);
  Profile x = alloc.profile;
  std::swap(x[p], x[q]);
  return OrderedAllocation{EntryOrder(with_ranks_swapped(alloc.order, p, q)), std::move(x)};
}

OrderedAllocation swap_order_only(const OrderedAllocation& alloc, int p, int q) {
  require_pair(alloc, p, q);
  return OrderedAllocation{EntryOrder(with_ranks_swapped(alloc.order, p, q)), alloc.profile};
}

PivotClass classify_pivot(const LevelTable& table, const OrderedAllocation& alloc,
                          int level_i, int p) {
  table.require_monotone();
  alloc.require_valid(table.game());
  int k = table.levels().count();
  if (level_i < 1 || level_i > k - 1) {
    throw LevelOutOfRange("level " + std::to_string(level_i) + " outside [1, " +
                          std::to_string(k - 1) + "]");
  }
  const GameLadder& game = table.game();
  int j = game.levels();

  Profile bottom = prefix_extreme(game, alloc, p, PrefixEnd::Bottom);
  Profile top = prefix_extreme(game, alloc, p, PrefixEnd::Top);
  int li_bottom = table.level_at(encode_profile(bottom, j));
  int li_top = table.level_at(encode_profile(top, j));
  int li_bottom_p = table.level_at(encode_profile(promote(bottom, p, 1, j), j));
  int li_top_p = table.level_at(encode_profile(promote(top, p, j, j), j));

  bool securer;
  bool blocker;
  if (game.orientation() == Orientation::NonIncreasing) {
    securer = li_top <= level_i && li_top_p > level_i;
    blocker = li_bottom > level_i && li_bottom_p <= level_i;
  } else {
    securer = li_bottom <= level_i && li_bottom_p > level_i;
    blocker = li_top > level_i && li_top_p <= level_i;
  }
  if (securer && blocker) {
    throw InternalInconsistency("securer and blocker branches both hold on a monotone game");
  }
  if (securer) return PivotClass::Securer;
  if (blocker) return PivotClass::Blocker;
  return PivotClass::None;
}

PivotClass classify_pivot(const GameLadder& game, const OrderedAllocation& alloc,
                          int level_i, int p) {
  return classify_pivot(LevelTable(game), alloc, level_i, p);
}

DMembership d_membership(const LevelTable& table, const OrderedAllocation& alloc,
                         int level_i, int p, int q) {
  require_pair(alloc, p, q);
  DMembership result;
  Pos xp = alloc.profile[p];
  Pos xq = alloc.profile[q];
  if (xp == xq) return result;

  PivotClass own = classify_pivot(table, alloc, level_i, q);
  if (own == PivotClass::None) return result;
  OrderedAllocation swapped = swap_positions_only(alloc, p, q);
  PivotClass other = classify_pivot(table, swapped, level_i, q);

  bool p_stronger = p_at_stronger_slot(table.game(), xp, xq);
  result.in_d_plus = !p_stronger && own == PivotClass::Securer && other == PivotClass::Securer;
  result.in_d_minus = p_stronger && own == PivotClass::Blocker && other == PivotClass::Blocker;
  return result;
}

DMembership d_membership(const GameLadder& game, const OrderedAllocation& alloc,
                         int level_i, int p, int q) {
  return d_membership(LevelTable(game), alloc, level_i, p, q);
}

OrderedAllocation psi(const LevelTable& table, const OrderedAllocation& alloc,
                      int level_i, int p, int q) {
  require_pair(alloc, p, q);
  PivotClass q_class = classify_pivot(table, alloc, level_i, q);
  if (q_class == PivotClass::None) {
    throw NotInDomain("player " + std::to_string(q + 1) +
                      " is not pivotal at level " + std::to_string(level_i));
  }
  Pos xp = alloc.profile[p];
  Pos xq = alloc.profile[q];
  if (xp == xq) return swap_full(alloc, p, q);
  DMembership d = d_membership(table, alloc, level_i, p, q);
  if (p_at_stronger_slot(table.game(), xp, xq)) {
    return (q_class == PivotClass::Securer || d.in_d_minus) ? swap_order_only(alloc, p, q)
                                                            : swap_full(alloc, p, q);
  }
  return (q_class == PivotClass::Blocker || d.in_d_plus) ? swap_order_only(alloc, p, q)
                                                         : swap_full(alloc, p, q);
}

OrderedAllocation psi(const GameLadder& game, const OrderedAllocation& alloc,
                      int level_i, int p, int q) {
  return psi(LevelTable(game), alloc, level_i, p, q);
}

AllocationKey allocation_key(const GameLadder& game, const OrderedAllocation& alloc) {
  return AllocationKey{alloc.order.rank(), encode_profile(alloc.profile, game.levels())};
}

OrderedAllocation allocation_from_key(const GameLadder& game, const AllocationKey& key) {
  return OrderedAllocation{
      EntryOrder::from_rank(key.order_rank, game.players()),
      decode_profile(key.profile_index, game.players(), game.levels())};
}

InjectionReport verify_injection(const GameLadder& game, int p, int q, int level_i,
                                 const PivotOptions& options) {
  LevelTable table(game, options.cap);
  table.require_monotone();
  int n = game.players();
  std::uint64_t profiles = game.profile_count(options.cap);
  std::uint64_t orders = checked_factorial(n, options.cap);
  if (orders > options.cap / profiles) {
    throw EnumerationLimit(options.cap + 1, options.cap);
  }

  InjectionReport report;
  std::map<AllocationKey, AllocationKey> image_to_source;
  for (std::uint64_t rank = 0; rank < orders; ++rank) {
    OrderedAllocation alloc{EntryOrder::from_rank(rank, n), Profile::filled(n, 1)};
    for (std::uint64_t pi = 0; pi < profiles; ++pi) {
      if (is_pivotal_extremes(table, alloc, level_i, q)) {
        ++report.domain_size;
        AllocationKey source = allocation_key(game, alloc);
        OrderedAllocation image = psi(table, alloc, level_i, p, q);
        AllocationKey key = allocation_key(game, image);
        if (!is_pivotal_extremes(table, image, level_i, p)) {
          report.well_defined_failures.push_back({source, key});
        }
        auto [it, inserted] = image_to_source.emplace(key, source);
        if (!inserted) {
          report.collisions.push_back({it->second, source, key});
        }
      }
      next_profile(alloc.profile, game.levels());
    }
  }
  report.image_size = static_cast<std::uint64_t>(image_to_source.size());
  auto by_source = [](const auto& a, const auto& b) { return a.source < b.source; };
  std::sort(report.well_defined_failures.begin(), report.well_defined_failures.end(), by_source);
  std::sort(report.collisions.begin(), report.collisions.end(),
            [](const InjectionCollision& a, const InjectionCollision& b) {
              return a.second < b.second;
            });
  return report;
}

}  // namespace ladder
