#include <doctest.h>

#include "helpers.hpp"

using namespace ladder;
using namespace test_support;

TEST_SUITE("random games and claim suite") {

TEST_CASE("generator is deterministic") {
  for (int g = 0; g < 10; ++g) {
    GameLadder a = random_game(42, static_cast<std::uint64_t>(g));
    GameLadder b = random_game(42, static_cast<std::uint64_t>(g));
    CHECK(save_game(a) == save_game(b));
  }
  bool any_different = false;
  for (int g = 0; g < 10; ++g) {
    any_different = any_different ||
                    save_game(random_game(1, static_cast<std::uint64_t>(g))) !=
                        save_game(random_game(2, static_cast<std::uint64_t>(g)));
  }
  CHECK(any_different);
}

TEST_CASE("generated games respect their parameters") {
  RandomGameSpec spec;
  spec.max_players = 4;
  spec.max_values = 3;
  bool saw_linear = false;
  for (int g = 0; g < 50; ++g) {
    GameLadder game = random_game(97, static_cast<std::uint64_t>(g), spec);
    CHECK(game.players() >= 2);
    CHECK(game.players() <= 4);
    CHECK(game.levels() >= 2);
    CHECK(game.levels() <= 3);
    OutputLevels levels = output_levels(game);
    CHECK(levels.count() >= 2);
    CHECK(levels.count() <= 3);
    if (!std::holds_alternative<ExplicitTable>(game.representation())) {
      CHECK(validate_monotone(game).holds);
    }
    if (g < 20 && is_linear(game).linear) saw_linear = true;
  }
  CHECK(saw_linear);  // uniformly-ordered weighted games keep the linear subset non-empty
}

TEST_CASE("orientation and kind filters") {
  RandomGameSpec spec;
  spec.monotone_only = true;
  for (int g = 0; g < 20; ++g) {
    GameLadder game = random_game(101, static_cast<std::uint64_t>(g), spec);
    CHECK_FALSE(std::holds_alternative<ExplicitTable>(game.representation()));
  }
  spec.orientation = Orientation::NonDecreasing;
  for (int g = 0; g < 20; ++g) {
    CHECK(random_game(101, static_cast<std::uint64_t>(g), spec).orientation() ==
          Orientation::NonDecreasing);
  }
  spec.orientation = Orientation::NonIncreasing;
  for (int g = 0; g < 20; ++g) {
    CHECK(random_game(101, static_cast<std::uint64_t>(g), spec).orientation() ==
          Orientation::NonIncreasing);
  }
}

TEST_CASE("claim suite on the incomplete built-in") {
  std::vector<GameLadder> games{make_prop2()};
  std::vector<std::string> claims{"prop1", "prop2", "prop3"};
  auto results = run_claims(games, claims, {});
  REQUIRE(results.size() == 3);
  CHECK(results[0].name == "prop1");
  CHECK(results[0].status == ClaimStatus::Pass);
  CHECK(results[1].status == ClaimStatus::Pass);
  CHECK(results[1].detail.find("1 and 3") != std::string::npos);
  CHECK(results[2].status == ClaimStatus::Pass);
  CHECK(results[2].detail.find("(1,2,3)") != std::string::npos);
}

TEST_CASE("linear-only claims skip on incomplete games") {
  std::vector<GameLadder> games{make_prop2()};
  std::vector<std::string> claims{"prop4", "prop5", "prop6", "theorem1"};
  for (const ClaimResult& r : run_claims(games, claims, {})) {
    CHECK(r.status == ClaimStatus::Skipped);
    CHECK(r.games_skipped == 1);
  }
}

TEST_CASE("claims on the linear micro instance") {
  std::vector<GameLadder> games{make_cap_dual()};
  std::vector<std::string> claims{"prop4", "prop5",  "prop6",
                                  "theorem1", "theorem2", "lemma1", "injection"};
  for (const ClaimResult& r : run_claims(games, claims, {})) {
    CAPTURE(r.name);
    CHECK(r.status == ClaimStatus::Pass);
  }
}

TEST_CASE("degenerate games skip the pivot claims") {
  std::vector<GameLadder> games{make_constant(2, 2)};
  std::vector<std::string> claims{"theorem2", "lemma1", "injection"};
  for (const ClaimResult& r : run_claims(games, claims, {})) {
    CHECK(r.status == ClaimStatus::Skipped);
  }
}

TEST_CASE("claim name handling") {
  CHECK(canonical_claim_name("lemma1_equivalence") == "lemma1");
  CHECK(canonical_claim_name("prop3") == "prop3");
  CHECK(canonical_claim_name("nonsense").empty());
  std::vector<GameLadder> games{make_cap_dual()};
  std::vector<std::string> claims{"nonsense"};
  CHECK_THROWS_AS(run_claims(games, claims, {}), ParseError);
  CHECK(all_claim_names().size() == 10);
}

TEST_CASE("property claims hold over a seeded batch") {
  std::vector<GameLadder> games;
  for (int g = 0; g < 40; ++g) {
    games.push_back(random_game(42, static_cast<std::uint64_t>(g)));
  }
  std::vector<std::string> claims{"prop1", "prop4", "prop5", "prop6", "theorem1"};
  auto results = run_claims(games, claims, {});
  CHECK(results[0].games_passed == 40);  // prop1 applies to every game
  for (const ClaimResult& r : results) {
    CAPTURE(r.name);
    CHECK(r.games_failed == 0);
    CHECK(r.status != ClaimStatus::Skipped);
  }
}

}  // TEST_SUITE
