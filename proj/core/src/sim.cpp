#include "ladder/sim.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ladder {

Ladder Ladder::identity(int n) {
  Ladder l;
  l.rungs.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) l.rungs[static_cast<std::size_t>(p)] = p;
  return l;
}

void Ladder::require_valid(int n) const {
  if (static_cast<int>(rungs.size()) != n) {
    throw DimensionMismatch("ladder lists " + std::to_string(rungs.size()) +
                            " players, game has " + std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : rungs) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw DimensionMismatch("ladder is not a permutation of the players");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::Stable: return "stable";
    case Termination::RoundLimit: return "round_limit";
    case Termination::CycleDetected: return "cycle_detected";
  }
  return "?";
}

SimTrace run_ladder(const RelationMatrix& relation, const Ladder& initial, int max_rounds) {
  int n = relation.players();
  initial.require_valid(n);

  SimTrace trace;
  trace.initial = initial;
  Ladder current = initial;
  std::set<std::vector<int>> seen{current.rungs};

  auto dominates = [&](int a, int b) {
    return relation.classify(a, b) == PairClass::Dominates;
  };

  for (int round = 1; round <= max_rounds; ++round) {
    bool swapped = false;
    for (int b = n - 1; b >= 1; --b) {
      for (int a = b - 1; a >= 0; --a) {
        int challenger = current.rungs[static_cast<std::size_t>(b)];
        int incumbent = current.rungs[static_cast<std::size_t>(a)];
        if (dominates(challenger, incumbent)) {
          std::swap(current.rungs[static_cast<std::size_t>(a)],
                    current.rungs[static_cast<std::size_t>(b)]);
          trace.events.push_back({round, challenger, incumbent});
          swapped = true;
        }
      }
    }
    trace.rounds = round;
    if (!swapped) {
      trace.termination = Termination::Stable;
      trace.final_ladder = current;
      return trace;
    }
    if (!seen.insert(current.rungs).second) {
      trace.termination = Termination::CycleDetected;
      trace.final_ladder = current;
      return trace;
    }
  }
  trace.termination = Termination::RoundLimit;
  trace.final_ladder = current;
  return trace;
}

SimTrace run_ladder(const GameLadder& game, const Ladder& initial, int max_rounds) {
  return run_ladder(relation_matrix(game), initial, max_rounds);
}

}  // namespace ladder
