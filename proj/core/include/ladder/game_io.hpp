#pragma once

#include <iosfwd>
#include <string>

#include "ladder/game.hpp"

namespace ladder {

/// Game file schema (JSON):
///   {"players": n, "levels": j,
///    "orientation": "non_decreasing" | "non_increasing",
///    "representation":
///        {"kind": "explicit", "outputs": [..j^n values..]}
///      | {"kind": "downset", "generators": [[..], ..], "inside": 1, "outside": 0}
///      | {"kind": "upset",   "generators": [[..], ..], "inside": 1, "outside": 0}
///      | {"kind": "weighted", "weights": [[w_p1..w_pj], ..],
///         "thresholds": [t_1 > t_2 > ..], "values": [z_1 > z_2 > ..]}}
/// Generators and outputs use 1-based positions and canonical profile
/// order. Throws ParseError with a field diagnostic on malformed input.
GameLadder load_game(std::istream& in, const std::string& source_name = "<stream>");
GameLadder load_game_file(const std::string& path);
std::string save_game(const GameLadder& game);

/// Output-table text format: a header line "ladder-table v1 n=<n> j=<j>"
/// followed by one output value per line in canonical profile order.
void export_table(const GameLadder& game, std::ostream& out,
                  std::uint64_t cap = kDefaultEnumCap);
GameLadder import_table(std::istream& in, Orientation orientation,
                        const std::string& source_name = "<stream>");

}  // namespace ladder
