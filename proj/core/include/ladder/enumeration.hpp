#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ladder/profile.hpp"

namespace ladder {

/// Default ceiling on exact enumerations (profiles or allocations).
inline constexpr std::uint64_t kDefaultEnumCap = 20'000'000;

/// base^exp, throwing EnumerationLimit against the given cap on overflow
/// or when the result exceeds the cap.
std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap);

/// n! for small n; throws EnumerationLimit on overflow against the cap.
std::uint64_t checked_factorial(int n, std::uint64_t cap);

/// Mixed-radix odometer over [1, j]^n in canonical order. Returns false
/// once the vector wraps back to all-ones.
bool next_profile(std::vector<Pos>& digits, int j);
bool next_profile(Profile& x, int j);

/// Lexicographic unranking of a permutation of {0, .., n-1}.
std::vector<int> permutation_from_rank(std::uint64_t rank, int n);
std::uint64_t permutation_rank(const std::vector<int>& perm);

/// Splits [0, total) into at most `threads` contiguous blocks and runs
/// `body(worker, begin, end)` on each, joining before returning. Workers
/// are indexed consecutively from 0 so callers can merge per-worker
/// buffers in a fixed order.
void parallel_blocks(std::uint64_t total, int threads,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body);

}  // namespace ladder
