#include "ladder/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "ladder/errors.hpp"

namespace ladder {

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (int e = 0; e < exp; ++e) {
    if (base != 0 && result > cap / base) {
      throw EnumerationLimit(cap + 1, cap);
    }
    result *= base;
  }
  if (result > cap) throw EnumerationLimit(result, cap);
  return result;
}

std::uint64_t checked_factorial(int n, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) {
    if (result > cap / static_cast<std::uint64_t>(i)) {
      throw EnumerationLimit(cap + 1, cap);
    }
    result *= static_cast<std::uint64_t>(i);
  }
  if (result > cap) throw EnumerationLimit(result, cap);
  return result;
}

bool next_profile(std::vector<Pos>& digits, int j) {
  for (auto& d : digits) {
    if (d < j) {
      ++d;
      return true;
    }
    d = 1;
  }
  return false;
}

bool next_profile(Profile& x, int j) {
  for (int p = 0; p < x.size(); ++p) {
    if (x[p] < j) {
      ++x[p];
      return true;
    }
    x[p] = 1;
  }
  return false;
}

std::vector<int> permutation_from_rank(std::uint64_t rank, int n) {
  // Factorial number system: digit m picks the (rank / (n-1-m)!)-th of the
  // remaining players.
  if (n <= 20 && rank >= checked_factorial(n, UINT64_MAX)) {
    throw DimensionMismatch("permutation rank " + std::to_string(rank) +
                            " outside [0, " + std::to_string(n) + "!)");
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) {
    fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] *
                                        static_cast<std::uint64_t>(i);
  }
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    std::uint64_t block = fact[static_cast<std::size_t>(n - 1 - m)];
    auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    perm.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return perm;
}

std::uint64_t permutation_rank(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) {
    fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] *
                                        static_cast<std::uint64_t>(i);
  }
  std::uint64_t rank = 0;
  for (int m = 0; m < n; ++m) {
    int smaller = 0;
    for (int a = m + 1; a < n; ++a) {
      if (perm[static_cast<std::size_t>(a)] < perm[static_cast<std::size_t>(m)]) ++smaller;
    }
    rank += static_cast<std::uint64_t>(smaller) * fact[static_cast<std::size_t>(n - 1 - m)];
  }
  return rank;
}

void parallel_blocks(std::uint64_t total, int threads,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  if (threads < 1) threads = 1;
  auto workers = static_cast<std::uint64_t>(threads);
  if (workers > total) workers = total == 0 ? 1 : total;
  if (workers <= 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::uint64_t chunk = total / workers;
  std::uint64_t rem = total % workers;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
    pool.emplace_back(body, static_cast<int>(w), begin, end);
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace ladder
