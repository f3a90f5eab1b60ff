#include "ladder/game_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ladder {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& what) {
  throw ParseError(source + ": " + what);
}

double number_field(const json& obj, const char* key, const std::string& source) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    fail(source, std::string("missing or non-numeric field \"") + key + "\"");
  }
  return obj[key].get<double>();
}

std::vector<Profile> parse_generators(const json& rep, const std::string& source) {
  if (!rep.contains("generators") || !rep["generators"].is_array()) {
    fail(source, "missing \"generators\" array");
  }
  std::vector<Profile> generators;
  for (const json& row : rep["generators"]) {
    if (!row.is_array()) fail(source, "generator is not an array");
    std::vector<Pos> pos;
    for (const json& v : row) {
      if (!v.is_number_integer()) fail(source, "generator positions must be integers");
      pos.push_back(v.get<Pos>());
    }
    generators.emplace_back(std::move(pos));
  }
  return generators;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

GameLadder load_game(std::istream& in, const std::string& source_name) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(source_name, e.what());
  }
  if (!doc.is_object()) fail(source_name, "top-level value must be an object");
  if (!doc.contains("players") || !doc["players"].is_number_integer()) {
    fail(source_name, "missing integer field \"players\"");
  }
  if (!doc.contains("levels") || !doc["levels"].is_number_integer()) {
    fail(source_name, "missing integer field \"levels\"");
  }
  int n = doc["players"].get<int>();
  int j = doc["levels"].get<int>();

  if (!doc.contains("orientation") || !doc["orientation"].is_string()) {
    fail(source_name, "missing string field \"orientation\"");
  }
  std::string o = doc["orientation"].get<std::string>();
  Orientation orientation;
  if (o == "non_decreasing") {
    orientation = Orientation::NonDecreasing;
  } else if (o == "non_increasing") {
    orientation = Orientation::NonIncreasing;
  } else {
    fail(source_name, "orientation must be \"non_decreasing\" or \"non_increasing\"");
  }

  if (!doc.contains("representation") || !doc["representation"].is_object()) {
    fail(source_name, "missing object field \"representation\"");
  }
  const json& rep = doc["representation"];
  if (!rep.contains("kind") || !rep["kind"].is_string()) {
    fail(source_name, "missing string field \"representation.kind\"");
  }
  std::string kind = rep["kind"].get<std::string>();

  try {
    if (kind == "explicit") {
      if (!rep.contains("outputs") || !rep["outputs"].is_array()) {
        fail(source_name, "missing \"outputs\" array");
      }
      ExplicitTable table;
      for (const json& v : rep["outputs"]) {
        if (!v.is_number()) fail(source_name, "outputs must be numbers");
        table.outputs.push_back(v.get<double>());
      }
      return GameLadder(n, j, orientation, std::move(table));
    }
    if (kind == "downset" || kind == "upset") {
      auto generators = parse_generators(rep, source_name);
      double inside = rep.contains("inside") ? number_field(rep, "inside", source_name) : 1.0;
      double outside = rep.contains("outside") ? number_field(rep, "outside", source_name) : 0.0;
      if (kind == "downset") {
        return GameLadder(n, j, orientation,
                          DownSetIndicator{std::move(generators), inside, outside});
      }
      return GameLadder(n, j, orientation,
                        UpSetIndicator{std::move(generators), inside, outside});
    }
    if (kind == "weighted") {
      WeightedMultiLevel w;
      if (!rep.contains("weights") || !rep["weights"].is_array()) {
        fail(source_name, "missing \"weights\" array");
      }
      for (const json& row : rep["weights"]) {
        if (!row.is_array()) fail(source_name, "weight row is not an array");
        std::vector<double> weights;
        for (const json& v : row) {
          if (!v.is_number()) fail(source_name, "weights must be numbers");
          weights.push_back(v.get<double>());
        }
        w.weights.push_back(std::move(weights));
      }
      for (const char* key : {"thresholds", "values"}) {
        if (!rep.contains(key) || !rep[key].is_array()) {
          fail(source_name, std::string("missing \"") + key + "\" array");
        }
        for (const json& v : rep[key]) {
          if (!v.is_number()) fail(source_name, std::string(key) + " must be numbers");
          (key[0] == 't' ? w.thresholds : w.values).push_back(v.get<double>());
        }
      }
      return GameLadder(n, j, orientation, std::move(w));
    }
  } catch (const DimensionMismatch& e) {
    fail(source_name, e.what());
  }
  fail(source_name, "unknown representation kind \"" + kind + "\"");
}

GameLadder load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return load_game(in, path);
}

std::string save_game(const GameLadder& game) {
  json rep;
  if (const auto* table = std::get_if<ExplicitTable>(&game.representation())) {
    rep["kind"] = "explicit";
    rep["outputs"] = table->outputs;
  } else if (const auto* down = std::get_if<DownSetIndicator>(&game.representation())) {
    rep["kind"] = "downset";
    json generators = json::array();
    for (const Profile& g : down->generators) {
      generators.push_back(std::vector<Pos>(g.positions().begin(), g.positions().end()));
    }
    rep["generators"] = std::move(generators);
    rep["inside"] = down->inside;
    rep["outside"] = down->outside;
  } else if (const auto* up = std::get_if<UpSetIndicator>(&game.representation())) {
    rep["kind"] = "upset";
    json generators = json::array();
    for (const Profile& g : up->generators) {
      generators.push_back(std::vector<Pos>(g.positions().begin(), g.positions().end()));
    }
    rep["generators"] = std::move(generators);
    rep["inside"] = up->inside;
    rep["outside"] = up->outside;
  } else {
    const auto& w = std::get<WeightedMultiLevel>(game.representation());
    rep["kind"] = "weighted";
    rep["weights"] = w.weights;
    rep["thresholds"] = w.thresholds;
    rep["values"] = w.values;
  }
  json doc;
  doc["players"] = game.players();
  doc["levels"] = game.levels();
  doc["orientation"] = to_string(game.orientation());
  doc["representation"] = std::move(rep);
  return doc.dump(2) + "\n";
}

void export_table(const GameLadder& game, std::ostream& out, std::uint64_t cap) {
  std::uint64_t count = game.profile_count(cap);
  out << "ladder-table v1 n=" << game.players() << " j=" << game.levels() << "\n";
  Profile x = Profile::filled(game.players(), 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    out << format_double(game.evaluate(x)) << "\n";
    next_profile(x, game.levels());
  }
}

GameLadder import_table(std::istream& in, Orientation orientation,
                        const std::string& source_name) {
  std::string header;
  if (!std::getline(in, header)) fail(source_name, "empty table file");
  int n = 0;
  int j = 0;
  {
    std::istringstream hs(header);
    std::string magic;
    std::string version;
    std::string nfield;
    std::string jfield;
    hs >> magic >> version >> nfield >> jfield;
    if (magic != "ladder-table" || version != "v1" || nfield.rfind("n=", 0) != 0 ||
        jfield.rfind("j=", 0) != 0) {
      fail(source_name, "bad header, expected \"ladder-table v1 n=<n> j=<j>\"");
    }
    try {
      n = std::stoi(nfield.substr(2));
      j = std::stoi(jfield.substr(2));
    } catch (const std::exception&) {
      fail(source_name, "bad header dimensions");
    }
  }
  ExplicitTable table;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double v = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      fail(source_name, "line " + std::to_string(line_no) + ": not a number");
    }
    table.outputs.push_back(v);
  }
  try {
    return GameLadder(n, j, orientation, std::move(table));
  } catch (const DimensionMismatch& e) {
    fail(source_name, e.what());
  }
}

}  // namespace ladder
