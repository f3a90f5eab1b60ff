#include <doctest.h>

#include <sstream>

#include "helpers.hpp"

using namespace ladder;
using namespace test_support;

namespace {

GameLadder parse(const std::string& text) {
  std::istringstream in(text);
  return load_game(in, "<test>");
}

void check_same_outputs(const GameLadder& a, const GameLadder& b) {
  REQUIRE(a.players() == b.players());
  REQUIRE(a.levels() == b.levels());
  for_each_profile(a.players(), a.levels(),
                   [&](const Profile& x) { CHECK(a.evaluate(x) == b.evaluate(x)); });
}

}  // namespace

TEST_SUITE("game files") {

TEST_CASE("schema round-trip for every representation kind") {
  RandomGameSpec spec;
  spec.max_players = 3;
  for (int g = 0; g < 12; ++g) {
    GameLadder game = random_game(23, static_cast<std::uint64_t>(g), spec);
    GameLadder loaded = parse(save_game(game));
    CHECK(loaded.orientation() == game.orientation());
    check_same_outputs(game, loaded);
    CHECK(save_game(loaded) == save_game(game));
  }
}

TEST_CASE("documented field layout parses") {
  GameLadder down = parse(R"({"players": 2, "levels": 2,
    "orientation": "non_increasing",
    "representation": {"kind": "downset", "generators": [[2, 1]],
                       "inside": 1, "outside": 0}})");
  check_same_outputs(down, make_cap21());

  GameLadder up = parse(R"({"players": 2, "levels": 2,
    "orientation": "non_decreasing",
    "representation": {"kind": "upset", "generators": [[1, 2]]}})");
  check_same_outputs(up, make_cap_dual());

  GameLadder table = parse(R"({"players": 2, "levels": 2,
    "orientation": "non_increasing",
    "representation": {"kind": "explicit", "outputs": [1, 1, 0, 0]}})");
  check_same_outputs(table, make_cap21());

  GameLadder weighted = parse(R"({"players": 2, "levels": 2,
    "orientation": "non_decreasing",
    "representation": {"kind": "weighted", "weights": [[0, 1], [0, 1]],
                       "thresholds": [2], "values": [1, 0]}})");
  CHECK(weighted.evaluate(P({2, 2})) == 1.0);
  CHECK(weighted.evaluate(P({2, 1})) == 0.0);
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_AS(parse("not json"), ParseError);
  CHECK_THROWS_AS(parse(R"({"levels": 2})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"players": 2, "levels": 2, "orientation": "sideways",
    "representation": {"kind": "explicit", "outputs": [0, 0, 0, 0]}})"),
                  ParseError);
  CHECK_THROWS_AS(parse(R"({"players": 2, "levels": 2, "orientation": "non_decreasing",
    "representation": {"kind": "mystery"}})"),
                  ParseError);
  // wrong output count surfaces as a parse error with the source name
  try {
    parse(R"({"players": 2, "levels": 2, "orientation": "non_decreasing",
      "representation": {"kind": "explicit", "outputs": [1, 2, 3]}})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("<test>") != std::string::npos);
  }
  CHECK_THROWS_AS(load_game_file("/nonexistent/game.json"), ParseError);
}

TEST_CASE("table export format") {
  std::ostringstream out;
  export_table(make_cap21(), out);
  CHECK(out.str() == "ladder-table v1 n=2 j=2\n1\n1\n0\n0\n");
}

TEST_CASE("table import round-trip") {
  RandomGameSpec spec;
  spec.max_players = 3;
  for (int g = 0; g < 8; ++g) {
    GameLadder game = random_game(29, static_cast<std::uint64_t>(g), spec);
    std::ostringstream out;
    export_table(game, out);
    std::istringstream in(out.str());
    GameLadder imported = import_table(in, game.orientation());
    check_same_outputs(game, imported);
  }
}

TEST_CASE("table import diagnostics") {
  {
    std::istringstream in("");
    CHECK_THROWS_AS(import_table(in, Orientation::NonDecreasing), ParseError);
  }
  {
    std::istringstream in("wrong-header v1 n=2 j=2\n0\n0\n0\n0\n");
    CHECK_THROWS_AS(import_table(in, Orientation::NonDecreasing), ParseError);
  }
  {
    std::istringstream in("ladder-table v1 n=2 j=2\n0\nnot-a-number\n0\n0\n");
    CHECK_THROWS_AS(import_table(in, Orientation::NonDecreasing), ParseError);
  }
  {
    std::istringstream in("ladder-table v1 n=2 j=2\n0\n0\n0\n");
    CHECK_THROWS_AS(import_table(in, Orientation::NonDecreasing), ParseError);
  }
}

TEST_CASE("builtin names") {
  CHECK_FALSE(resolve_builtin("games/foo.json").has_value());
  CHECK(resolve_builtin("builtin:prop2")->players() == 7);
  CHECK(resolve_builtin("builtin:cap21")->players() == 2);
  CHECK(resolve_builtin("builtin:cap-dual")->orientation() == Orientation::NonDecreasing);
  GameLadder unanimity = *resolve_builtin("builtin:unanimity:3:2");
  CHECK(unanimity.players() == 3);
  CHECK(unanimity.levels() == 2);
  CHECK(unanimity.evaluate(P({2, 2, 2})) == 1.0);
  CHECK(unanimity.evaluate(P({2, 1, 2})) == 0.0);
  CHECK_THROWS_AS(resolve_builtin("builtin:nope"), ParseError);
  CHECK_THROWS_AS(resolve_builtin("builtin:unanimity:x:y"), ParseError);
}

}  // TEST_SUITE
