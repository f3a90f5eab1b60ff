#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ladder {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A profile, player index, or position does not fit the game's dimensions.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A level pair (r, s) with r <= s was passed where r > s is required.
class InvalidLevels : public Error {
public:
  using Error::Error;
};

/// An exact sweep would exceed the configured enumeration cap.
class EnumerationLimit : public Error {
public:
  EnumerationLimit(std::uint64_t required_states, std::uint64_t cap_value)
      : Error("enumeration of " + std::to_string(required_states) +
              " states exceeds cap " + std::to_string(cap_value)),
        required(required_states), cap(cap_value) {}
  std::uint64_t required;
  std::uint64_t cap;
};

/// Level index i outside [1, k-1].
class LevelOutOfRange : public Error {
public:
  using Error::Error;
};

/// The game has a single output value (k = 1); no pivot analysis exists.
class DegenerateRange : public Error {
public:
  using Error::Error;
};

/// The declared orientation does not hold for the game.
class NotMonotone : public Error {
public:
  using Error::Error;
};

/// The influence relation on the game is not complete. Carries one
/// incomparable pair (0-based players).
class NotLinear : public Error {
public:
  NotLinear(int p, int q)
      : Error("relation is not complete: players " + std::to_string(p + 1) +
              " and " + std::to_string(q + 1) + " are incomparable"),
        witness(p, q) {}
  std::pair<int, int> witness;
};

/// An allocation outside the domain of the swap correspondence.
class NotInDomain : public Error {
public:
  using Error::Error;
};

/// Malformed game file or table file.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A structural guarantee the analysis relies on failed to hold. This is
/// never swallowed: it means a checked claim is false for the given input.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

/// The unique-pivot guarantee failed for some allocation.
class PivotContractViolation : public InternalInconsistency {
public:
  enum class Kind { NoPivot, MultiplePivots };
  PivotContractViolation(Kind violation, const std::string& context)
      : InternalInconsistency((violation == Kind::NoPivot
                                   ? "no pivotal player: "
                                   : "multiple pivotal players: ") +
                              context),
        kind(violation) {}
  Kind kind;
};

}  // namespace ladder
