// Deterministic sampling helpers. std::mt19937_64 output is fully specified
// by the standard; the distribution adaptors are not, so bounded draws are
// done by rejection sampling here to keep results reproducible everywhere.
#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace mapr {

// Uniform draw from [0, bound). bound must be positive.
inline std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  while (true) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

// Uniform k-subset of {0, ..., n-1} by partial Fisher-Yates, returned sorted.
inline std::vector<int> sample_without_replacement(std::mt19937_64& rng, int n, int k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < k; ++i) {
    std::uint64_t j = static_cast<std::uint64_t>(i) +
                      bounded_random(rng, static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace mapr
