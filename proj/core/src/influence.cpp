#include "ladder/influence.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ladder {

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Dominates: return "dominates";
    case PairClass::Dominated: return "dominated";
    case PairClass::Equivalent: return "equivalent";
    case PairClass::Incomparable: return "incomparable";
  }
  return "?";
}

namespace {

void require_players(const GameLadder& game, int p, int q) {
  if (p < 0 || p >= game.players() || q < 0 || q >= game.players()) {
    throw DimensionMismatch("player outside [1, " + std::to_string(game.players()) + "]");
  }
  if (p == q) throw DimensionMismatch("players must be distinct");
}

// Advances the digits of every player except p and q; those two stay
// pinned at the base level.
bool next_completion(Profile& x, int j, int p, int q) {
  for (int a = 0; a < x.size(); ++a) {
    if (a == p || a == q) continue;
    if (x[a] < j) {
      ++x[a];
      return true;
    }
    x[a] = 1;
  }
  return false;
}

template <typename Eval>
LocalBeat beats_local_impl(const GameLadder& game, int p, int q, Pos r, Pos s, Eval&& f) {
  int j = game.levels();
  Profile x = Profile::filled(game.players(), 1);
  x[p] = s;
  x[q] = s;
  do {
    Profile xp = x;
    xp[p] = r;
    Profile xq = x;
    xq[q] = r;
    if (f(xp) < f(xq)) {
      return LocalBeat{false, x};
    }
  } while (next_completion(x, j, p, q));
  return LocalBeat{true, std::nullopt};
}

template <typename Eval>
bool global_geq_impl(const GameLadder& game, int p, int q, Eval&& f) {
  for (Pos s = 1; s < game.levels(); ++s) {
    for (Pos r = s + 1; r <= game.levels(); ++r) {
      if (!beats_local_impl(game, p, q, r, s, f).holds) return false;
    }
  }
  return true;
}

}  // namespace

LocalBeat beats_local(const GameLadder& game, int p, int q, Pos r, Pos s) {
  require_players(game, p, q);
  if (s < 1 || r > game.levels()) {
    throw DimensionMismatch("levels outside [1, " + std::to_string(game.levels()) + "]");
  }
  if (r <= s) {
    throw InvalidLevels("required r > s, got r=" + std::to_string(r) +
                        " s=" + std::to_string(s));
  }
  if (game.players() > 2) {
    checked_pow(static_cast<std::uint64_t>(game.levels()), game.players() - 2,
                kDefaultEnumCap);
  }
  return beats_local_impl(game, p, q, r, s,
                          [&](const Profile& x) { return game.evaluate(x); });
}

bool global_geq(const GameLadder& game, int p, int q) {
  require_players(game, p, q);
  return global_geq_impl(game, p, q,
                         [&](const Profile& x) { return game.evaluate(x); });
}

RelationMatrix relation_matrix(const GameLadder& game, const RelationOptions& options) {
  int n = game.players();
  RelationMatrix m(n);
  std::uint64_t count = game.profile_count(options.cap);

  bool use_table;
  switch (options.backend) {
    case RelationOptions::Backend::Direct: use_table = false; break;
    case RelationOptions::Backend::Table: use_table = true; break;
    default: use_table = count <= (1u << 20); break;
  }

  std::optional<LevelTable> table;
  if (use_table) table.emplace(game, options.cap);

  // Ordered pairs p != q, flattened; each worker owns a byte range.
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p != q) pairs.emplace_back(p, q);
    }
  }
  std::vector<unsigned char> holds(pairs.size(), 0);
  parallel_blocks(pairs.size(), options.threads,
                  [&](int, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t i = begin; i < end; ++i) {
                      auto [p, q] = pairs[i];
                      bool geq;
                      if (table) {
                        int j = game.levels();
                        geq = global_geq_impl(game, p, q, [&](const Profile& x) {
                          return table->value_at(encode_profile(x, j));
                        });
                      } else {
                        geq = global_geq_impl(game, p, q, [&](const Profile& x) {
                          return game.evaluate(x);
                        });
                      }
                      holds[i] = geq ? 1 : 0;
                    }
                  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    m.set_geq(pairs[i].first, pairs[i].second, holds[i] != 0);
  }
  return m;
}

LinearityReport is_linear(const RelationMatrix& m) {
  for (int p = 0; p < m.players(); ++p) {
    for (int q = p + 1; q < m.players(); ++q) {
      if (m.classify(p, q) == PairClass::Incomparable) {
        return LinearityReport{false, std::make_pair(p, q)};
      }
    }
  }
  return LinearityReport{true, std::nullopt};
}

LinearityReport is_linear(const GameLadder& game) {
  return is_linear(relation_matrix(game));
}

std::vector<std::array<int, 3>> transitivity_violations(const RelationMatrix& m) {
  std::vector<std::array<int, 3>> violations;
  int n = m.players();
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        if (m.geq(p, q) && m.geq(q, r) && !m.geq(p, r)) {
          violations.push_back({p, q, r});
        }
      }
    }
  }
  return violations;
}

std::vector<std::array<int, 3>> strict_transitivity_violations(const RelationMatrix& m) {
  auto strict = [&](int p, int q) { return m.geq(p, q) && !m.geq(q, p); };
  std::vector<std::array<int, 3>> violations;
  int n = m.players();
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        if (strict(p, q) && strict(q, r) && !strict(p, r)) {
          violations.push_back({p, q, r});
        }
      }
    }
  }
  return violations;
}

LayerDecomposition layers(const RelationMatrix& m) {
  int n = m.players();
  EquivalenceReport eq = check_equivalence(m);
  if (!eq.all_hold()) {
    throw InternalInconsistency("the symmetric part is not an equivalence relation");
  }
  LinearityReport lin = is_linear(m);
  if (!lin.linear) {
    throw NotLinear(lin.witness->first, lin.witness->second);
  }

  LayerDecomposition result;
  result.membership.assign(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    if (result.membership[static_cast<std::size_t>(p)] >= 0) continue;
    int layer = static_cast<int>(result.layers.size());
    std::vector<int> members{p};
    result.membership[static_cast<std::size_t>(p)] = layer;
    for (int q = p + 1; q < n; ++q) {
      if (result.membership[static_cast<std::size_t>(q)] < 0 &&
          m.classify(p, q) == PairClass::Equivalent) {
        members.push_back(q);
        result.membership[static_cast<std::size_t>(q)] = layer;
      }
    }
    result.layers.push_back(std::move(members));
  }

  // The induced relation on classes must be a transitive tournament, and
  // every member pair must agree on its direction.
  int classes = static_cast<int>(result.layers.size());
  for (int a = 0; a < classes; ++a) {
    for (int b = a + 1; b < classes; ++b) {
      PairClass direction = m.classify(result.layers[static_cast<std::size_t>(a)][0],
                                       result.layers[static_cast<std::size_t>(b)][0]);
      if (direction != PairClass::Dominates && direction != PairClass::Dominated) {
        throw InternalInconsistency("quotient relation is not asymmetric between classes");
      }
      for (int pa : result.layers[static_cast<std::size_t>(a)]) {
        for (int pb : result.layers[static_cast<std::size_t>(b)]) {
          if (m.classify(pa, pb) != direction) {
            throw InternalInconsistency("class members disagree on dominance direction");
          }
        }
      }
    }
  }
  auto class_dominates = [&](int a, int b) {
    return m.classify(result.layers[static_cast<std::size_t>(a)][0],
                      result.layers[static_cast<std::size_t>(b)][0]) == PairClass::Dominates;
  };
  for (int a = 0; a < classes; ++a) {
    for (int b = 0; b < classes; ++b) {
      for (int c = 0; c < classes; ++c) {
        if (a != b && b != c && a != c && class_dominates(a, b) && class_dominates(b, c) &&
            !class_dominates(a, c)) {
          throw InternalInconsistency("quotient relation is not transitive");
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(classes));
  for (int a = 0; a < classes; ++a) order[static_cast<std::size_t>(a)] = a;
  std::sort(order.begin(), order.end(), class_dominates);
  std::vector<std::vector<int>> sorted;
  sorted.reserve(static_cast<std::size_t>(classes));
  for (int a : order) sorted.push_back(std::move(result.layers[static_cast<std::size_t>(a)]));
  result.layers = std::move(sorted);
  for (int layer = 0; layer < classes; ++layer) {
    for (int p : result.layers[static_cast<std::size_t>(layer)]) {
      result.membership[static_cast<std::size_t>(p)] = layer;
    }
  }
  return result;
}

LayerDecomposition layers(const GameLadder& game) {
  return layers(relation_matrix(game));
}

EquivalenceReport check_equivalence(const RelationMatrix& m) {
  EquivalenceReport report;
  int n = m.players();
  auto sim = [&](int p, int q) { return m.geq(p, q) && m.geq(q, p); };
  for (int p = 0; p < n; ++p) {
    if (!sim(p, p)) {
      report.reflexive = false;
      report.reflexivity_violations.push_back(p);
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (sim(p, q) != sim(q, p)) {
        report.symmetric = false;
        report.symmetry_violations.push_back({p, q});
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        if (sim(p, q) && sim(q, r) && !sim(p, r)) {
          report.transitive = false;
          report.transitivity_violations.push_back({p, q, r});
        }
      }
    }
  }
  return report;
}

}  // namespace ladder
