#include "ladder/profile.hpp"

#include <string>

namespace ladder {

void Profile::require_valid(int n, int j) const {
  if (size() != n) {
    throw DimensionMismatch("profile has " + std::to_string(size()) +
                            " entries, game has " + std::to_string(n) + " players");
  }
  for (int p = 0; p < n; ++p) {
    Pos v = (*this)[p];
    if (v < 1 || v > j) {
      throw DimensionMismatch("position " + std::to_string(v) + " of player " +
                              std::to_string(p + 1) + " outside [1, " +
                              std::to_string(j) + "]");
    }
  }
}

bool Profile::leq(const Profile& other) const {
  if (size() != other.size()) {
    throw DimensionMismatch("comparing profiles of different length");
  }
  for (int p = 0; p < size(); ++p) {
    if ((*this)[p] > other[p]) return false;
  }
  return true;
}

std::uint64_t encode_profile(const Profile& x, int j) {
  std::uint64_t index = 0;
  std::uint64_t weight = 1;
  for (int p = 0; p < x.size(); ++p) {
    index += static_cast<std::uint64_t>(x[p] - 1) * weight;
    weight *= static_cast<std::uint64_t>(j);
  }
  return index;
}

Profile decode_profile(std::uint64_t index, int n, int j) {
  std::vector<Pos> pos(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    pos[static_cast<std::size_t>(p)] =
        static_cast<Pos>(index % static_cast<std::uint64_t>(j)) + 1;
    index /= static_cast<std::uint64_t>(j);
  }
  return Profile(std::move(pos));
}

Profile promote(const Profile& x, int player, Pos r, int j) {
  if (player < 0 || player >= x.size()) {
    throw DimensionMismatch("player " + std::to_string(player + 1) + " outside [1, " +
                            std::to_string(x.size()) + "]");
  }
  if (r < 1 || r > j) {
    throw DimensionMismatch("target level " + std::to_string(r) + " outside [1, " +
                            std::to_string(j) + "]");
  }
  Profile result = x;
  result[player] = r;
  return result;
}

Profile reverse_scale(const Profile& x, int j) {
  Profile result = x;
  for (int p = 0; p < x.size(); ++p) {
    result[p] = j + 1 - x[p];
  }
  return result;
}

}  // namespace ladder
