#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladder/game.hpp"
#include "ladder/pivot.hpp"

namespace ladder {

enum class ClaimStatus { Pass, Fail, Skipped };

const char* to_string(ClaimStatus s);

/// Aggregated verdict of one claim over a batch of games. Fail wins over
/// Pass; a claim that applied to no game in the batch is Skipped.
struct ClaimResult {
  std::string name;
  ClaimStatus status = ClaimStatus::Skipped;
  int games_passed = 0;
  int games_failed = 0;
  int games_skipped = 0;
  std::string detail;
  nlohmann::json witnesses = nlohmann::json::array();
};

struct VerifySuiteOptions {
  int threads = 1;
  std::uint64_t cap = kDefaultEnumCap;
  PivotConfig config = PivotConfig::Canonical;
  /// Games whose allocation space exceeds this skip the exhaustive
  /// pivot-test equivalence sweep.
  std::uint64_t equivalence_sweep_guard = 50'000;
};

/// prop1 .. prop6, theorem1, theorem2, lemma1, injection.
const std::vector<std::string>& all_claim_names();

/// Accepts the names above plus the alias lemma1_equivalence; returns the
/// canonical name or an empty string.
std::string canonical_claim_name(const std::string& name);

/// Runs the requested claims over every game; each requested claim
/// appears exactly once in the result, in request order.
std::vector<ClaimResult> run_claims(std::span<const GameLadder> games,
                                    std::span<const std::string> claims,
                                    const VerifySuiteOptions& options = {});

}  // namespace ladder
