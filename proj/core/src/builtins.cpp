#include "ladder/builtins.hpp"

namespace ladder {

GameLadder make_prop2() {
  DownSetIndicator rep;
  rep.generators = {
      Profile({3, 1, 2, 1, 1, 2, 2}),
      Profile({1, 3, 2, 1, 1, 2, 2}),
      Profile({1, 2, 3, 1, 1, 2, 2}),
  };
  return GameLadder(7, 3, Orientation::NonIncreasing, std::move(rep));
}

GameLadder make_cap21() {
  DownSetIndicator rep;
  rep.generators = {Profile({2, 1})};
  return GameLadder(2, 2, Orientation::NonIncreasing, std::move(rep));
}

GameLadder make_cap_dual() {
  UpSetIndicator rep;
  rep.generators = {Profile({1, 2})};
  return GameLadder(2, 2, Orientation::NonDecreasing, std::move(rep));
}

GameLadder make_unanimity(int n, int j) {
  UpSetIndicator rep;
  rep.generators = {Profile::filled(n, j)};
  return GameLadder(n, j, Orientation::NonDecreasing, std::move(rep));
}

GameLadder make_constant(int n, int j, double value) {
  WeightedMultiLevel rep;
  rep.weights.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(j), 0.0));
  rep.values = {value};
  return GameLadder(n, j, Orientation::NonDecreasing, std::move(rep));
}

std::optional<GameLadder> resolve_builtin(const std::string& name) {
  const std::string prefix = "builtin:";
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  std::string rest = name.substr(prefix.size());
  if (rest == "prop2") return make_prop2();
  if (rest == "cap21") return make_cap21();
  if (rest == "cap-dual") return make_cap_dual();
  const std::string unanimity = "unanimity:";
  if (rest.rfind(unanimity, 0) == 0) {
    std::string dims = rest.substr(unanimity.size());
    auto colon = dims.find(':');
    if (colon != std::string::npos) {
      try {
        int n = std::stoi(dims.substr(0, colon));
        int j = std::stoi(dims.substr(colon + 1));
        return make_unanimity(n, j);
      } catch (const std::exception&) {
        throw ParseError(name + ": bad unanimity dimensions");
      }
    }
    throw ParseError(name + ": expected builtin:unanimity:<n>:<j>");
  }
  throw ParseError(name + ": unknown builtin game");
}

}  // namespace ladder
