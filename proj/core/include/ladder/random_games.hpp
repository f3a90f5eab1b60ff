#pragma once

#include <cstdint>
#include <optional>

#include "ladder/game.hpp"

namespace ladder {

/// Controls for the seeded game generator used by the verification
/// suites. Kinds cycle deterministically over the eligible set so every
/// batch contains down-set, up-set, weighted, uniformly-ordered weighted
/// (these are always linear), and - unless monotone_only - explicit
/// table games that need not be monotone.
struct RandomGameSpec {
  int min_players = 2;
  int max_players = 4;
  int min_levels = 2;
  int max_levels = 3;
  /// Upper bound on distinct output values of generated games.
  int max_values = 3;
  bool monotone_only = false;
  /// Restrict to games declared with this orientation.
  std::optional<Orientation> orientation;
};

/// Deterministic: the same (seed, index, spec) always produces the same
/// game, independently of platform or standard library. Generated games
/// always have at least two output values.
GameLadder random_game(std::uint64_t seed, std::uint64_t index, const RandomGameSpec& spec = {});

}  // namespace ladder
