#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ladder/ladder.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapabilityError = 3;

std::uint64_t enumeration_cap() {
  if (const char* raw = std::getenv("LADDER_ENUM_CAP")) {
    try {
      return std::stoull(raw);
    } catch (const std::exception&) {
      throw ladder::ParseError("LADDER_ENUM_CAP is not a number");
    }
  }
  return ladder::kDefaultEnumCap;
}

ladder::GameLadder load_game_arg(const std::string& name) {
  if (auto builtin = ladder::resolve_builtin(name)) return *builtin;
  return ladder::load_game_file(name);
}

std::vector<int> parse_player_list(const std::string& csv, int n) {
  std::vector<int> players;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      int p = std::stoi(item);
      if (p < 1 || p > n) throw std::out_of_range("player");
      players.push_back(p - 1);
    } catch (const std::exception&) {
      throw ladder::ParseError("bad player list \"" + csv + "\"");
    }
  }
  return players;
}

ladder::PivotConfig parse_config(const std::string& name) {
  if (name == "canonical") return ladder::PivotConfig::Canonical;
  if (name == "printed") return ladder::PivotConfig::Printed;
  throw ladder::ParseError("--config must be canonical or printed");
}

int cmd_analyze(const std::string& game_name, const std::string& config_name,
                bool as_json, int threads) {
  ladder::GameLadder game = load_game_arg(game_name);
  bool dualized = false;
  ladder::GameLadder analyzed =
      ladder::configured_game(game, parse_config(config_name), &dualized);
  ladder::RelationOptions options;
  options.threads = threads;
  options.cap = enumeration_cap();
  ladder::RelationMatrix m = ladder::relation_matrix(analyzed, options);
  if (as_json) {
    std::cout << ladder::relation_report_json(m).dump(2) << "\n";
  } else {
    std::cout << "game: " << game.players() << " players, " << game.levels()
              << " levels, " << ladder::to_string(game.orientation());
    if (dualized) std::cout << " (analyzed through the reversed-scale dual)";
    std::cout << "\n" << ladder::relation_report_text(m);
  }
  return kExitOk;
}

int cmd_pivots(const std::string& game_name, const std::string& config_name,
               int level, bool as_json, int threads) {
  ladder::GameLadder game = load_game_arg(game_name);
  ladder::PivotConfig config = parse_config(config_name);
  bool dualized = false;
  ladder::GameLadder analyzed = ladder::configured_game(game, config, &dualized);

  ladder::PivotOptions options;
  options.threads = threads;
  options.cap = enumeration_cap();
  if (level > 0) options.level = level;

  ladder::RelationOptions relation_options;
  relation_options.threads = threads;
  relation_options.cap = options.cap;
  ladder::RelationMatrix m = ladder::relation_matrix(analyzed, relation_options);
  ladder::PivotTable table = ladder::pivot_counts(analyzed, options);
  ladder::Theorem2Report t2 = ladder::theorem2_check(m, table);

  if (as_json) {
    std::cout << ladder::pivot_report_json(table, t2).dump(2) << "\n";
  } else {
    std::cout << "configuration: " << ladder::to_string(config);
    if (dualized) std::cout << " (analyzed through the reversed-scale dual)";
    std::cout << "\n" << ladder::pivot_report_text(table, t2);
  }
  return kExitOk;
}

int cmd_verify_injection(const std::string& game_name, const std::vector<int>& pqi,
                         const std::string& config_name, bool as_json, int threads) {
  if (game_name.empty()) {
    throw ladder::ParseError("--injection needs a game to verify");
  }
  ladder::GameLadder game = load_game_arg(game_name);
  bool dualized = false;
  ladder::GameLadder analyzed =
      ladder::configured_game(game, parse_config(config_name), &dualized);
  int p = pqi[0] - 1;
  int q = pqi[1] - 1;
  int level = pqi[2];
  if (p < 0 || p >= game.players() || q < 0 || q >= game.players()) {
    throw ladder::ParseError("--injection players outside [1, " +
                             std::to_string(game.players()) + "]");
  }
  ladder::PivotOptions options;
  options.threads = threads;
  options.cap = enumeration_cap();
  ladder::InjectionReport report = ladder::verify_injection(analyzed, p, q, level, options);
  if (as_json) {
    std::cout << ladder::injection_report_json(report).dump(2) << "\n";
  } else {
    std::cout << "correspondence " << pqi[0] << " <- " << pqi[1] << " at level " << level
              << " (" << ladder::to_string(parse_config(config_name))
              << (dualized ? ", analyzed through the reversed-scale dual" : "") << "):\n"
              << ladder::injection_report_text(report);
  }
  return kExitOk;
}

int cmd_verify(const std::string& game_name, const std::string& claims_csv,
               std::uint64_t seed, int random_games, const std::string& config_name,
               bool as_json, int threads) {
  std::vector<ladder::GameLadder> games;
  if (!game_name.empty()) games.push_back(load_game_arg(game_name));
  for (int i = 0; i < random_games; ++i) {
    games.push_back(ladder::random_game(seed, static_cast<std::uint64_t>(i)));
  }
  if (games.empty()) {
    throw ladder::ParseError("nothing to verify: give a game file or --random-games");
  }

  std::vector<std::string> claims;
  if (claims_csv.empty()) {
    claims = ladder::all_claim_names();
  } else {
    std::istringstream is(claims_csv);
    std::string item;
    while (std::getline(is, item, ',')) claims.push_back(item);
  }

  ladder::VerifySuiteOptions options;
  options.threads = threads;
  options.cap = enumeration_cap();
  options.config = parse_config(config_name);
  std::vector<ladder::ClaimResult> results = ladder::run_claims(games, claims, options);

  bool any_failed = false;
  if (as_json) {
    nlohmann::json out;
    out["seed"] = seed;
    out["games"] = games.size();
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : results) {
      any_failed = any_failed || r.status == ladder::ClaimStatus::Fail;
      list.push_back(nlohmann::json{{"name", r.name},
                                    {"status", ladder::to_string(r.status)},
                                    {"games_passed", r.games_passed},
                                    {"games_failed", r.games_failed},
                                    {"games_skipped", r.games_skipped},
                                    {"detail", r.detail},
                                    {"witnesses", r.witnesses}});
    }
    out["claims"] = std::move(list);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verifying " << games.size() << " game(s), seed " << seed << "\n";
    for (const auto& r : results) {
      any_failed = any_failed || r.status == ladder::ClaimStatus::Fail;
      std::cout << "  " << r.name << ": " << ladder::to_string(r.status) << " ("
                << r.games_passed << " pass, " << r.games_failed << " fail, "
                << r.games_skipped << " skipped)";
      if (!r.detail.empty()) std::cout << " - " << r.detail;
      std::cout << "\n";
    }
  }
  return any_failed ? kExitClaimFailure : kExitOk;
}

int cmd_simulate(const std::string& game_name, const std::string& initial_csv,
                 const std::string& config_name, int max_rounds, bool as_json) {
  ladder::GameLadder game = load_game_arg(game_name);
  ladder::GameLadder analyzed = ladder::configured_game(game, parse_config(config_name));
  ladder::Ladder initial;
  if (initial_csv.empty()) {
    initial = ladder::Ladder::identity(game.players());
  } else {
    initial.rungs = parse_player_list(initial_csv, game.players());
  }
  initial.require_valid(game.players());
  ladder::SimTrace trace = ladder::run_ladder(analyzed, initial, max_rounds);
  if (as_json) {
    for (const auto& line : ladder::sim_trace_jsonl(trace)) std::cout << line << "\n";
  } else {
    std::cout << ladder::sim_trace_text(trace);
  }
  return kExitOk;
}

int cmd_table_export(const std::string& game_name, const std::string& out_path) {
  ladder::GameLadder game = load_game_arg(game_name);
  if (out_path.empty()) {
    ladder::export_table(game, std::cout, enumeration_cap());
  } else {
    std::ofstream out(out_path);
    if (!out) throw ladder::ParseError(out_path + ": cannot open for writing");
    ladder::export_table(game, out, enumeration_cap());
  }
  return kExitOk;
}

int cmd_table_import(const std::string& table_path, const std::string& orientation_name,
                     const std::string& out_path) {
  ladder::Orientation orientation;
  if (orientation_name == "non_decreasing") {
    orientation = ladder::Orientation::NonDecreasing;
  } else if (orientation_name == "non_increasing") {
    orientation = ladder::Orientation::NonIncreasing;
  } else {
    throw ladder::ParseError("--orientation must be non_decreasing or non_increasing");
  }
  std::ifstream in(table_path);
  if (!in) throw ladder::ParseError(table_path + ": cannot open file");
  ladder::GameLadder game = ladder::import_table(in, orientation, table_path);
  std::string doc = ladder::save_game(game);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ladder::ParseError(out_path + ": cannot open for writing");
    out << doc;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact influence, pivot, and simulation analysis of game ladders"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--threads", threads, "worker threads for exact enumeration")
      ->check(CLI::PositiveNumber);

  std::string game_name;
  std::string config_name = "canonical";
  int level = 0;
  std::string claims_csv;
  std::uint64_t seed = 42;
  int random_games = 0;
  std::string initial_csv;
  int max_rounds = 1000;
  std::string out_path;
  std::string orientation_name;
  std::string table_path;

  auto* analyze = app.add_subcommand("analyze", "influence relation, linearity, layers");
  analyze->add_option("game", game_name, "game file or builtin:<name>")->required();
  analyze->add_option("--config", config_name, "canonical|printed (default canonical)");

  auto* pivots = app.add_subcommand("pivots", "pivot counts and count monotonicity");
  pivots->add_option("game", game_name, "game file or builtin:<name>")->required();
  pivots->add_option("--level", level, "restrict to one 1-based level index")
      ->check(CLI::PositiveNumber);
  pivots->add_option("--config", config_name, "canonical|printed (default canonical)");

  auto* verify = app.add_subcommand("verify", "run claim checkers on games");
  verify->add_option("game", game_name, "game file or builtin:<name>");
  verify->add_option("--claims", claims_csv, "comma-separated claim names (default all)");
  verify->add_option("--seed", seed, "seed for the random game generator");
  verify->add_option("--random-games", random_games, "number of generated games")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--config", config_name, "canonical|printed (default canonical)");
  std::vector<int> injection_pqi;
  verify->add_option("--injection", injection_pqi,
                     "verify the swap correspondence for players p q at level i")
      ->expected(3);

  auto* simulate = app.add_subcommand("simulate", "run the challenge/swap process");
  simulate->add_option("game", game_name, "game file or builtin:<name>")->required();
  simulate->add_option("--initial", initial_csv, "initial ladder, top first, 1-based");
  simulate->add_option("--max-rounds", max_rounds, "round limit")->check(CLI::PositiveNumber);
  simulate->add_option("--config", config_name, "canonical|printed (default canonical)");

  auto* table = app.add_subcommand("table", "output-table text format");
  table->require_subcommand(1);
  auto* table_export = table->add_subcommand("export", "write the output table of a game");
  table_export->add_option("game", game_name, "game file or builtin:<name>")->required();
  table_export->add_option("-o,--output", out_path, "output path (default stdout)");
  auto* table_import = table->add_subcommand("import", "build an explicit game from a table");
  table_import->add_option("table", table_path, "table file")->required();
  table_import->add_option("--orientation", orientation_name, "declared orientation")
      ->required();
  table_import->add_option("-o,--output", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(game_name, config_name, as_json, threads);
    if (*pivots) return cmd_pivots(game_name, config_name, level, as_json, threads);
    if (*verify) {
      if (!injection_pqi.empty()) {
        return cmd_verify_injection(game_name, injection_pqi, config_name, as_json, threads);
      }
      return cmd_verify(game_name, claims_csv, seed, random_games, config_name, as_json,
                        threads);
    }
    if (*simulate) {
      return cmd_simulate(game_name, initial_csv, config_name, max_rounds, as_json);
    }
    if (*table_export) return cmd_table_export(game_name, out_path);
    if (*table_import) return cmd_table_import(table_path, orientation_name, out_path);
  } catch (const ladder::DegenerateRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapabilityError;
  } catch (const ladder::EnumerationLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapabilityError;
  } catch (const ladder::InternalInconsistency& e) {
    std::cerr << "claim violated: " << e.what() << "\n";
    return kExitClaimFailure;
  } catch (const ladder::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
