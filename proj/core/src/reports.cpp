#include "ladder/reports.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ladder {

using nlohmann::json;

namespace {

json players_1based(const std::vector<int>& players) {
  json out = json::array();
  for (int p : players) out.push_back(p + 1);
  return out;
}

std::vector<std::vector<int>> report_classes(const RelationMatrix& m) {
  try {
    return layers(m).layers;
  } catch (const Error&) {
    // Not linear (or a checked claim failed): group by the symmetric part
    // with union-find and order classes by smallest member.
    int n = m.players();
    std::vector<int> root(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) root[static_cast<std::size_t>(p)] = p;
    std::function<int(int)> find = [&](int p) {
      while (root[static_cast<std::size_t>(p)] != p) p = root[static_cast<std::size_t>(p)];
      return p;
    };
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (m.classify(p, q) == PairClass::Equivalent) {
          root[static_cast<std::size_t>(find(q))] = find(p);
        }
      }
    }
    std::vector<std::vector<int>> classes;
    for (int p = 0; p < n; ++p) {
      if (find(p) == p) {
        std::vector<int> members;
        for (int q = 0; q < n; ++q) {
          if (find(q) == p) members.push_back(q);
        }
        classes.push_back(std::move(members));
      }
    }
    return classes;
  }
}

char class_symbol(PairClass c) {
  switch (c) {
    case PairClass::Dominates: return '>';
    case PairClass::Dominated: return '<';
    case PairClass::Equivalent: return '=';
    case PairClass::Incomparable: return '?';
  }
  return ' ';
}

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

json relation_report_json(const RelationMatrix& m) {
  int n = m.players();
  json geq = json::array();
  for (int p = 0; p < n; ++p) {
    json row = json::array();
    for (int q = 0; q < n; ++q) row.push_back(m.geq(p, q));
    geq.push_back(std::move(row));
  }
  json classes = json::array();
  for (const auto& members : report_classes(m)) classes.push_back(players_1based(members));
  json transitivity = json::array();
  for (const auto& [p, q, r] : transitivity_violations(m)) {
    transitivity.push_back(json::array({p + 1, q + 1, r + 1}));
  }
  json report;
  report["geq"] = std::move(geq);
  report["classes"] = std::move(classes);
  report["linear"] = is_linear(m).linear;
  report["violations"] = json{{"transitivity", std::move(transitivity)}};
  return report;
}

std::string relation_report_text(const RelationMatrix& m) {
  int n = m.players();
  std::ostringstream os;
  os << "pairwise classification (row vs column):\n    ";
  for (int q = 0; q < n; ++q) os << (q + 1) % 10 << ' ';
  os << '\n';
  for (int p = 0; p < n; ++p) {
    os << "  " << (p + 1) % 10 << ' ';
    for (int q = 0; q < n; ++q) {
      os << (p == q ? '.' : class_symbol(m.classify(p, q))) << ' ';
    }
    os << '\n';
  }
  LinearityReport lin = is_linear(m);
  if (lin.linear) {
    os << "relation is complete (linear game)\n";
    os << "layers, strongest first:";
    for (const auto& layer : layers(m).layers) {
      os << " {";
      for (std::size_t i = 0; i < layer.size(); ++i) {
        os << (i ? "," : "") << layer[static_cast<std::size_t>(i)] + 1;
      }
      os << "}";
    }
    os << '\n';
  } else {
    os << "relation is not complete; witness: players " << lin.witness->first + 1 << " and "
       << lin.witness->second + 1 << " are incomparable\n";
  }
  auto violations = transitivity_violations(m);
  if (violations.empty()) {
    os << "no transitivity violations\n";
  } else {
    os << violations.size() << " transitivity violation(s):";
    for (const auto& [p, q, r] : violations) {
      os << " (" << p + 1 << "," << q + 1 << "," << r + 1 << ")";
    }
    os << '\n';
  }
  return os.str();
}

json pivot_report_json(const PivotTable& table, const Theorem2Report& t2) {
  json violations = json::array();
  for (const auto& v : t2.violations) {
    violations.push_back(json{{"p", v.p + 1},
                              {"q", v.q + 1},
                              {"level", v.level_i},
                              {"count_p", v.count_p},
                              {"count_q", v.count_q}});
  }
  json counts = json::array();
  for (const auto& row : table.counts) counts.push_back(row);
  json report;
  report["levels"] = table.level_values;
  report["counts"] = std::move(counts);
  report["total_per_level"] = table.total_per_level;
  report["theorem2"] = json{{"as_stated", t2.as_stated},
                            {"reversed", t2.reversed},
                            {"violations", std::move(violations)}};
  return report;
}

std::string pivot_report_text(const PivotTable& table, const Theorem2Report& t2) {
  std::ostringstream os;
  os << "output levels:";
  for (double z : table.level_values) os << ' ' << format_value(z);
  os << "\npivot counts over " << table.total_per_level << " ordered allocations:\n";
  for (std::size_t row = 0; row < table.counts.size(); ++row) {
    os << "  level " << table.level_indices[row] << ":";
    std::uint64_t sum = 0;
    for (std::size_t p = 0; p < table.counts[row].size(); ++p) {
      os << " player" << p + 1 << "=" << table.counts[row][p];
      sum += table.counts[row][p];
    }
    os << "  (sum " << sum << (sum == table.total_per_level ? " ok" : " MISMATCH") << ")\n";
  }
  os << "count monotonicity along dominance (" << t2.pairs_checked << " checks): "
     << (t2.as_stated ? "holds" : "violated") << " as stated, "
     << (t2.reversed ? "holds" : "violated") << " reversed\n";
  for (const auto& v : t2.violations) {
    os << "  violation: player " << v.p + 1 << " >= player " << v.q + 1 << " at level "
       << v.level_i << " but counts " << v.count_p << " < " << v.count_q << "\n";
  }
  return os.str();
}

namespace {

json key_json(const AllocationKey& key) {
  return json{{"order_rank", key.order_rank}, {"profile_index", key.profile_index}};
}

}  // namespace

json injection_report_json(const InjectionReport& report) {
  json failures = json::array();
  for (const auto& f : report.well_defined_failures) {
    failures.push_back(json{{"source", key_json(f.source)}, {"image", key_json(f.image)}});
  }
  json collisions = json::array();
  for (const auto& c : report.collisions) {
    collisions.push_back(json{{"first", key_json(c.first)},
                              {"second", key_json(c.second)},
                              {"image", key_json(c.image)}});
  }
  json out;
  out["domain_size"] = report.domain_size;
  out["image_size"] = report.image_size;
  out["well_defined_failures"] = std::move(failures);
  out["injectivity_collisions"] = std::move(collisions);
  return out;
}

std::string injection_report_text(const InjectionReport& report) {
  std::ostringstream os;
  os << "domain " << report.domain_size << ", image " << report.image_size << ", "
     << report.well_defined_failures.size() << " well-definedness failure(s), "
     << report.collisions.size() << " collision(s)\n";
  return os.str();
}

std::vector<std::string> sim_trace_jsonl(const SimTrace& trace) {
  std::vector<std::string> lines;
  lines.push_back(json{{"type", "initial"},
                       {"ladder", players_1based(trace.initial.rungs)}}
                      .dump());
  for (const auto& e : trace.events) {
    lines.push_back(json{{"type", "swap"},
                         {"round", e.round},
                         {"challenger", e.challenger + 1},
                         {"incumbent", e.incumbent + 1}}
                        .dump());
  }
  lines.push_back(json{{"type", "final"},
                       {"ladder", players_1based(trace.final_ladder.rungs)},
                       {"termination", to_string(trace.termination)},
                       {"rounds", trace.rounds}}
                      .dump());
  return lines;
}

std::string sim_trace_text(const SimTrace& trace) {
  std::ostringstream os;
  auto print_ladder = [&](const Ladder& l) {
    for (std::size_t i = 0; i < l.rungs.size(); ++i) {
      os << (i ? "," : "") << l.rungs[i] + 1;
    }
  };
  os << "initial ladder (top first): ";
  print_ladder(trace.initial);
  os << '\n';
  for (const auto& e : trace.events) {
    os << "  round " << e.round << ": player " << e.challenger + 1
       << " displaces player " << e.incumbent + 1 << '\n';
  }
  os << "final ladder: ";
  print_ladder(trace.final_ladder);
  os << "\ntermination: " << to_string(trace.termination) << " after " << trace.rounds
     << " round(s), " << trace.events.size() << " swap(s)\n";
  return os.str();
}

}  // namespace ladder
