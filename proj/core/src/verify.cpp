#include "ladder/verify.hpp"

#include <algorithm>

#include "ladder/influence.hpp"
#include "ladder/injection.hpp"

namespace ladder {

using nlohmann::json;

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

struct GameVerdict {
  ClaimStatus status = ClaimStatus::Skipped;
  std::string note;
  json witness;
};

GameVerdict pass() { return {ClaimStatus::Pass, "", nullptr}; }
GameVerdict pass_note(std::string note) { return {ClaimStatus::Pass, std::move(note), nullptr}; }
GameVerdict skip(std::string reason) { return {ClaimStatus::Skipped, std::move(reason), nullptr}; }
GameVerdict fail(std::string note, json witness) {
  return {ClaimStatus::Fail, std::move(note), std::move(witness)};
}

json triples_json(const std::vector<std::array<int, 3>>& triples, std::size_t limit = 5) {
  json out = json::array();
  for (std::size_t i = 0; i < triples.size() && i < limit; ++i) {
    out.push_back(json::array({triples[i][0] + 1, triples[i][1] + 1, triples[i][2] + 1}));
  }
  return out;
}

// prop1: the symmetric part is an equivalence relation (any game).
GameVerdict claim_prop1(const RelationMatrix& m) {
  EquivalenceReport eq = check_equivalence(m);
  if (eq.all_hold()) return pass();
  json w;
  w["reflexivity"] = eq.reflexivity_violations;
  w["transitivity"] = triples_json(eq.transitivity_violations);
  return fail("symmetric part is not an equivalence relation", std::move(w));
}

// prop2: incompleteness, demonstrated whenever this game witnesses it.
GameVerdict claim_prop2(const RelationMatrix& m) {
  LinearityReport lin = is_linear(m);
  if (!lin.linear) {
    return pass_note("incompleteness confirmed: players " +
                     std::to_string(lin.witness->first + 1) + " and " +
                     std::to_string(lin.witness->second + 1) + " incomparable");
  }
  return skip("relation is complete on this game");
}

// prop3: non-transitivity, demonstrated whenever this game witnesses it.
GameVerdict claim_prop3(const RelationMatrix& m) {
  auto violations = transitivity_violations(m);
  if (!violations.empty()) {
    return pass_note("non-transitivity confirmed, e.g. (" +
                     std::to_string(violations[0][0] + 1) + "," +
                     std::to_string(violations[0][1] + 1) + "," +
                     std::to_string(violations[0][2] + 1) + ")");
  }
  return skip("no transitivity violation on this game");
}

GameVerdict claim_prop4(const RelationMatrix& m) {
  if (!is_linear(m).linear) return skip("game is not linear");
  auto violations = transitivity_violations(m);
  if (violations.empty()) return pass();
  return fail("relation of a linear game is not transitive", triples_json(violations));
}

GameVerdict claim_prop5(const RelationMatrix& m) {
  if (!is_linear(m).linear) return skip("game is not linear");
  int n = m.players();
  auto strict = [&](int a, int b) { return m.geq(a, b) && !m.geq(b, a); };
  auto sim = [&](int a, int b) { return m.geq(a, b) && m.geq(b, a); };
  std::vector<std::array<int, 3>> violations;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        if (p == q || q == r || p == r) continue;
        if (strict(p, q) && sim(q, r) && !strict(p, r)) violations.push_back({p, q, r});
        if (sim(p, q) && strict(q, r) && !strict(p, r)) violations.push_back({p, q, r});
      }
    }
  }
  if (violations.empty()) return pass();
  return fail("mixed dominance/equivalence transitivity fails", triples_json(violations));
}

GameVerdict claim_prop6(const RelationMatrix& m) {
  if (!is_linear(m).linear) return skip("game is not linear");
  auto violations = strict_transitivity_violations(m);
  if (violations.empty()) return pass();
  return fail("strict dominance of a linear game is not transitive", triples_json(violations));
}

GameVerdict claim_theorem1(const RelationMatrix& m) {
  if (!is_linear(m).linear) return skip("game is not linear");
  try {
    LayerDecomposition decomposition = layers(m);
    // Re-verify the layer laws directly from the matrix.
    for (std::size_t a = 0; a < decomposition.layers.size(); ++a) {
      for (int p : decomposition.layers[a]) {
        for (std::size_t b = 0; b < decomposition.layers.size(); ++b) {
          for (int q : decomposition.layers[b]) {
            if (p == q) continue;
            PairClass want = a == b ? PairClass::Equivalent
                                    : (a < b ? PairClass::Dominates : PairClass::Dominated);
            if (m.classify(p, q) != want) {
              return fail("layer decomposition violates the layer laws",
                          json{{"p", p + 1}, {"q", q + 1}});
            }
          }
        }
      }
    }
    return pass();
  } catch (const Error& e) {
    return fail(std::string("layer decomposition failed: ") + e.what(), nullptr);
  }
}

GameVerdict claim_theorem2(const GameLadder& game, const VerifySuiteOptions& options) {
  GameLadder analyzed = configured_game(game, options.config);
  LevelTable table(analyzed, options.cap);
  if (!table.monotone().holds) return skip("game is not monotone as declared");
  if (table.levels().count() < 2) return skip("degenerate range (k = 1)");
  PivotOptions pivot_options;
  pivot_options.threads = options.threads;
  pivot_options.cap = options.cap;
  try {
    Theorem2Report report = theorem2_check(analyzed, pivot_options);
    if (report.as_stated) return pass();
    json w = json::array();
    for (std::size_t i = 0; i < report.violations.size() && i < 5; ++i) {
      const auto& v = report.violations[i];
      w.push_back(json{{"p", v.p + 1},
                       {"q", v.q + 1},
                       {"level", v.level_i},
                       {"count_p", v.count_p},
                       {"count_q", v.count_q}});
    }
    return fail("count monotonicity violated", std::move(w));
  } catch (const EnumerationLimit&) {
    return skip("allocation space exceeds the enumeration cap");
  }
}

GameVerdict claim_lemma1(const GameLadder& game, const VerifySuiteOptions& options) {
  LevelTable table(game, options.cap);
  if (!table.monotone().holds) return skip("game is not monotone as declared");
  int k = table.levels().count();
  if (k < 2) return skip("degenerate range (k = 1)");
  int n = game.players();
  std::uint64_t profiles = game.profile_count(options.cap);
  std::uint64_t orders = checked_factorial(n, options.cap);
  if (orders > options.equivalence_sweep_guard / profiles) {
    return skip("allocation space exceeds the equivalence sweep guard");
  }
  for (std::uint64_t rank = 0; rank < orders; ++rank) {
    OrderedAllocation alloc{EntryOrder::from_rank(rank, n), Profile::filled(n, 1)};
    for (std::uint64_t pi = 0; pi < profiles; ++pi) {
      for (int i = 1; i <= k - 1; ++i) {
        for (int p = 0; p < n; ++p) {
          bool fast = is_pivotal_extremes(table, alloc, i, p);
          bool slow = is_pivotal_bruteforce(table, alloc, i, p);
          if (fast != slow) {
            return fail("extremes characterization disagrees with the definition",
                        json{{"order_rank", rank},
                             {"profile_index", pi},
                             {"level", i},
                             {"player", p + 1},
                             {"extremes", fast},
                             {"bruteforce", slow}});
          }
        }
      }
      next_profile(alloc.profile, game.levels());
    }
  }
  return pass();
}

GameVerdict claim_injection(const GameLadder& game, const VerifySuiteOptions& options) {
  GameLadder analyzed = configured_game(game, options.config);
  LevelTable table(analyzed, options.cap);
  if (!table.monotone().holds) return skip("game is not monotone as declared");
  int k = table.levels().count();
  if (k < 2) return skip("degenerate range (k = 1)");
  int n = analyzed.players();
  std::uint64_t profiles = analyzed.profile_count(options.cap);
  std::uint64_t orders = checked_factorial(n, options.cap);
  if (orders > options.equivalence_sweep_guard / profiles) {
    return skip("allocation space exceeds the equivalence sweep guard");
  }

  RelationOptions relation_options;
  relation_options.threads = options.threads;
  relation_options.cap = options.cap;
  RelationMatrix m = relation_matrix(analyzed, relation_options);
  PivotOptions pivot_options;
  pivot_options.threads = options.threads;
  pivot_options.cap = options.cap;
  PivotTable counts = pivot_counts(analyzed, pivot_options);

  PivotOptions single;
  single.cap = options.cap;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q || !m.geq(p, q)) continue;
      for (int i = 1; i <= k - 1; ++i) {
        InjectionReport report = verify_injection(analyzed, p, q, i, single);
        std::uint64_t cp = counts.counts_for(i)[static_cast<std::size_t>(p)];
        std::uint64_t cq = counts.counts_for(i)[static_cast<std::size_t>(q)];
        json where{{"p", p + 1}, {"q", q + 1}, {"level", i}};
        if (!report.ok()) {
          where["well_defined_failures"] = report.well_defined_failures.size();
          where["collisions"] = report.collisions.size();
          return fail("correspondence is not a well-defined injection", std::move(where));
        }
        if (report.domain_size != cq || report.image_size != report.domain_size || cp < cq) {
          where["domain"] = report.domain_size;
          where["image"] = report.image_size;
          where["count_p"] = cp;
          where["count_q"] = cq;
          return fail("correspondence cardinalities disagree with pivot counts",
                      std::move(where));
        }
      }
    }
  }
  return pass();
}

}  // namespace

const std::vector<std::string>& all_claim_names() {
  static const std::vector<std::string> names = {
      "prop1", "prop2", "prop3", "prop4", "prop5",
      "prop6", "theorem1", "theorem2", "lemma1", "injection"};
  return names;
}

std::string canonical_claim_name(const std::string& name) {
  if (name == "lemma1_equivalence") return "lemma1";
  for (const auto& known : all_claim_names()) {
    if (name == known) return name;
  }
  return "";
}

std::vector<ClaimResult> run_claims(std::span<const GameLadder> games,
                                    std::span<const std::string> claims,
                                    const VerifySuiteOptions& options) {
  std::vector<ClaimResult> results;
  for (const auto& raw_name : claims) {
    std::string name = canonical_claim_name(raw_name);
    if (name.empty()) throw ParseError("unknown claim \"" + raw_name + "\"");
    ClaimResult result;
    result.name = name;

    bool needs_relation = name == "prop1" || name == "prop2" || name == "prop3" ||
                          name == "prop4" || name == "prop5" || name == "prop6" ||
                          name == "theorem1";
    for (std::size_t g = 0; g < games.size(); ++g) {
      const GameLadder& game = games[g];
      GameVerdict verdict;
      if (needs_relation) {
        RelationOptions relation_options;
        relation_options.threads = options.threads;
        relation_options.cap = options.cap;
        RelationMatrix m =
            relation_matrix(configured_game(game, options.config), relation_options);
        if (name == "prop1") verdict = claim_prop1(m);
        else if (name == "prop2") verdict = claim_prop2(m);
        else if (name == "prop3") verdict = claim_prop3(m);
        else if (name == "prop4") verdict = claim_prop4(m);
        else if (name == "prop5") verdict = claim_prop5(m);
        else if (name == "prop6") verdict = claim_prop6(m);
        else verdict = claim_theorem1(m);
      } else if (name == "theorem2") {
        verdict = claim_theorem2(game, options);
      } else if (name == "lemma1") {
        verdict = claim_lemma1(game, options);
      } else {
        verdict = claim_injection(game, options);
      }

      switch (verdict.status) {
        case ClaimStatus::Pass: ++result.games_passed; break;
        case ClaimStatus::Fail: ++result.games_failed; break;
        case ClaimStatus::Skipped: ++result.games_skipped; break;
      }
      if (verdict.status == ClaimStatus::Fail && result.witnesses.size() < 5) {
        json entry;
        entry["game"] = g;
        entry["note"] = verdict.note;
        entry["witness"] = verdict.witness;
        result.witnesses.push_back(std::move(entry));
      }
      if (result.detail.empty() && !verdict.note.empty() &&
          verdict.status != ClaimStatus::Skipped) {
        result.detail = verdict.note;
      }
    }

    if (result.games_failed > 0) {
      result.status = ClaimStatus::Fail;
    } else if (result.games_passed > 0) {
      result.status = ClaimStatus::Pass;
    } else {
      result.status = ClaimStatus::Skipped;
      if (result.detail.empty()) result.detail = "claim did not apply to any game";
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace ladder
