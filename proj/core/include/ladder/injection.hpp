#pragma once

#include <cstdint>
#include <vector>

#include "ladder/pivot.hpp"

namespace ladder {

/// The two mutually exclusive ways of being pivotal on a monotone game:
/// a Securer guarantees output at or above z_i (and would lose that by
/// moving to the weak end); a Blocker caps output below z_i (and would
/// lose that by moving to the strong end).
enum class PivotClass { Securer, Blocker, None };

const char* to_string(PivotClass c);

/// Exchanges both the entry ranks and the positions of p and q.
/// Involution.
OrderedAllocation swap_full(const OrderedAllocation& alloc, int p, int q);

/// Exchanges only the entry ranks of p and q; the profile is unchanged.
/// Involution.
OrderedAllocation swap_order_only(const OrderedAllocation& alloc, int p, int q);

/// Which branch of the extremes characterization makes p pivotal, None
/// when p is not pivotal. Securer and Blocker never hold together on a
/// monotone game; that is checked and surfaced loudly.
PivotClass classify_pivot(const LevelTable& table, const OrderedAllocation& alloc,
                          int level_i, int p);
PivotClass classify_pivot(const GameLadder& game, const OrderedAllocation& alloc,
                          int level_i, int p);

struct DMembership {
  bool in_d_plus = false;
  bool in_d_minus = false;
};

/// Membership of R in the auxiliary swap sets keyed on players p and q:
/// D+ needs q Securer in both R and its position-swapped variant with p
/// at the strictly output-weaker slot; D- is the Blocker analogue with p
/// at the strictly output-stronger slot. "Stronger" means the
/// output-raising end of the position scale, so the comparison reads
/// x_p < x_q under a non-increasing game and x_p > x_q under a
/// non-decreasing one, matching how the extremes forms transport.
DMembership d_membership(const LevelTable& table, const OrderedAllocation& alloc,
                         int level_i, int p, int q);
DMembership d_membership(const GameLadder& game, const OrderedAllocation& alloc,
                         int level_i, int p, int q);

/// The swap correspondence from allocations where q is pivotal to
/// allocations where p should be, keyed on how the two players' slots
/// compare: equal slots always swap fully; with p at the stronger slot
/// the order-only swap fires for a Securer q or a D- member; with p at
/// the weaker slot it fires for a Blocker q or a D+ member; full swap
/// otherwise. Throws NotInDomain when q is not pivotal in the
/// allocation.
OrderedAllocation psi(const LevelTable& table, const OrderedAllocation& alloc,
                      int level_i, int p, int q);
OrderedAllocation psi(const GameLadder& game, const OrderedAllocation& alloc,
                      int level_i, int p, int q);

/// Canonical identifier of an allocation: lexicographic permutation rank
/// plus canonical profile index.
struct AllocationKey {
  std::uint64_t order_rank = 0;
  std::uint64_t profile_index = 0;
  friend bool operator==(const AllocationKey&, const AllocationKey&) = default;
  auto operator<=>(const AllocationKey&) const = default;
};

AllocationKey allocation_key(const GameLadder& game, const OrderedAllocation& alloc);
OrderedAllocation allocation_from_key(const GameLadder& game, const AllocationKey& key);

struct InjectionFailure {
  AllocationKey source;
  AllocationKey image;
};

struct InjectionCollision {
  AllocationKey first;
  AllocationKey second;
  AllocationKey image;
};

struct InjectionReport {
  std::uint64_t domain_size = 0;
  std::uint64_t image_size = 0;
  std::vector<InjectionFailure> well_defined_failures;  // image not pivotal for p
  std::vector<InjectionCollision> collisions;

  bool ok() const { return well_defined_failures.empty() && collisions.empty(); }
};

/// Applies the correspondence to every allocation in which q is pivotal
/// at level i and records every image that fails to be pivotal for p and
/// every collision. Lists are sorted by canonical allocation key. The
/// caller chooses p and q (ordinarily a pair with p >= q under the
/// influence relation).
InjectionReport verify_injection(const GameLadder& game, int p, int q, int level_i,
                                 const PivotOptions& options = {});

}  // namespace ladder
