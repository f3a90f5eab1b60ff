#pragma once

#include <vector>

#include "ladder/influence.hpp"

namespace ladder {

/// The players listed top rung first.
struct Ladder {
  std::vector<int> rungs;

  static Ladder identity(int n);
  void require_valid(int n) const;
  friend bool operator==(const Ladder&, const Ladder&) = default;
  auto operator<=>(const Ladder&) const = default;
};

struct SwapEvent {
  int round = 0;
  int challenger = 0;  // the lower-placed player who won
  int incumbent = 0;
};

enum class Termination { Stable, RoundLimit, CycleDetected };

const char* to_string(Termination t);

struct SimTrace {
  Ladder initial;
  std::vector<SwapEvent> events;
  Ladder final_ladder;
  Termination termination = Termination::Stable;
  int rounds = 0;
};

/// Round-based challenge process: each round sweeps every rung pair
/// bottom-up (lowest challenger first, nearest incumbent first) and the
/// lower-placed player displaces the higher-placed one exactly when the
/// challenger strictly dominates the incumbent. Equivalent or
/// incomparable pairs never swap. Stops on the first swap-free round, on
/// a repeated ladder state, or at the round limit.
SimTrace run_ladder(const RelationMatrix& relation, const Ladder& initial, int max_rounds);
SimTrace run_ladder(const GameLadder& game, const Ladder& initial, int max_rounds = 1000);

}  // namespace ladder
