#pragma once

#include <optional>
#include <string>

#include "ladder/game.hpp"

namespace ladder {

/// The 7-player, 3-level down-set game whose influence relation is
/// incomplete (players 1 and 3 incomparable) and non-transitive.
GameLadder make_prop2();

/// 2-player, 2-level down-set game with the single generator (2, 1);
/// non-increasing.
GameLadder make_cap21();

/// The reversed-scale counterpart of cap21: up-set generator (1, 2),
/// non-decreasing.
GameLadder make_cap_dual();

/// f = 1 exactly on the all-j profile (up-set, non-decreasing).
GameLadder make_unanimity(int n, int j);

/// Constant game; useful for degenerate-range paths.
GameLadder make_constant(int n, int j, double value = 5.0);

/// Resolves "builtin:prop2", "builtin:cap21", "builtin:cap-dual" and
/// "builtin:unanimity:<n>:<j>". Returns nullopt for names without the
/// "builtin:" prefix; throws ParseError for unknown builtin names.
std::optional<GameLadder> resolve_builtin(const std::string& name);

}  // namespace ladder
