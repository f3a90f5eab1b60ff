#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ladder/influence.hpp"
#include "ladder/injection.hpp"
#include "ladder/pivot.hpp"
#include "ladder/sim.hpp"

namespace ladder {

/// Machine-readable relation report:
///   {"geq": [[bool]], "classes": [[players]], "linear": bool,
///    "violations": {"transitivity": [[p, q, r]]}}
/// Players are 1-based. Classes come in dominance order on linear games
/// and sorted by smallest member otherwise.
nlohmann::json relation_report_json(const RelationMatrix& m);
std::string relation_report_text(const RelationMatrix& m);

/// Machine-readable pivot report:
///   {"levels": [z..], "counts": [[..]], "total_per_level": n!*j^n,
///    "theorem2": {"as_stated": bool, "reversed": bool, "violations": [..]}}
nlohmann::json pivot_report_json(const PivotTable& table, const Theorem2Report& t2);
std::string pivot_report_text(const PivotTable& table, const Theorem2Report& t2);

nlohmann::json injection_report_json(const InjectionReport& report);
std::string injection_report_text(const InjectionReport& report);

/// One JSON object per line: an initial line, one line per swap event,
/// and a final line carrying the termination cause.
std::vector<std::string> sim_trace_jsonl(const SimTrace& trace);
std::string sim_trace_text(const SimTrace& trace);

}  // namespace ladder
