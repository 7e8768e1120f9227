#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "evac/generator.hpp"
#include "evac/model.hpp"

namespace evac::testing {

// tau = 1, w = (3, 1, 2, 5), len = (2, 1, 3), cap = (1, 2, 1).
inline PathNetwork f1() { return {1.0, {3, 1, 2, 5}, {{2, 1}, {1, 2}, {3, 1}}}; }
// Same as f1 with every capacity 1.
inline PathNetwork f2() { return {1.0, {3, 1, 2, 5}, {{2, 1}, {1, 1}, {3, 1}}}; }

inline bool close(double a, double b, double rel = 1e-9) {
  if (a == b) return true;
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Random instance with n drawn from [1, max_n]; integer data in the default generator ranges.
inline PathNetwork random_network(std::uint64_t seed, std::size_t max_n, bool uniform = false,
                                  std::size_t min_n = 1) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  GenOptions opt;
  opt.n = min_n + rng() % (max_n - min_n + 1);
  opt.seed = seed;
  opt.uniform = uniform;
  // Occasionally exercise zero lengths and a non-unit tau.
  if (seed % 7 == 3) opt.length = {0, 3};
  if (seed % 5 == 2) opt.tau = 0.5 + static_cast<double>(seed % 4);
  return generate_instance(opt);
}

/// Point with a random position inside [v_lo, v_hi], vertices included.
inline Point random_point(const PrefixIndex& idx, std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  if (lo == hi || rng() % 3 == 0) return Point::vertex(lo + rng() % (hi - lo + 1));
  const std::size_t e = lo + rng() % (hi - lo);
  const double frac = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return idx.point_on_edge(e, frac * idx.edge_length(e));
}

}  // namespace evac::testing
