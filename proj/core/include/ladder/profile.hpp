#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ladder/errors.hpp"

namespace ladder {

/// Position type index, always in [1, j].
using Pos = int;

/// Assignment of every player to a position type. Players are 0-based
/// indices into the underlying vector; position values are 1-based.
class Profile {
public:
  Profile() = default;
  explicit Profile(std::vector<Pos> positions) : pos_(std::move(positions)) {}

  /// All n players at the same position.
  static Profile filled(int n, Pos value) {
    return Profile(std::vector<Pos>(static_cast<std::size_t>(n), value));
  }

  int size() const { return static_cast<int>(pos_.size()); }
  Pos operator[](int player) const { return pos_[static_cast<std::size_t>(player)]; }
  Pos& operator[](int player) { return pos_[static_cast<std::size_t>(player)]; }
  std::span<const Pos> positions() const { return pos_; }

  /// Throws DimensionMismatch unless the profile has n entries in [1, j].
  void require_valid(int n, int j) const;

  /// Componentwise x <= y.
  bool leq(const Profile& other) const;

  friend bool operator==(const Profile&, const Profile&) = default;
  auto operator<=>(const Profile&) const = default;

private:
  std::vector<Pos> pos_;
};

/// Canonical profile index: player 0 is the least significant mixed-radix
/// digit, positions are 1-based, so index(x) = sum_p (x_p - 1) * j^p.
std::uint64_t encode_profile(const Profile& x, int j);
Profile decode_profile(std::uint64_t index, int n, int j);

/// x + (r - x_p) e^p: the profile equal to x except that player p sits at
/// level r. Idempotent when x_p == r.
Profile promote(const Profile& x, int player, Pos r, int j);

/// Position-scale reversal x_p -> j + 1 - x_p.
Profile reverse_scale(const Profile& x, int j);

}  // namespace ladder
