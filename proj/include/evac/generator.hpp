/**
 * @file generator.hpp
 * @brief Seeded random instances.
 */

#pragma once

#include <cstddef>
#include <cstdint>

#include "evac/model.hpp"

namespace evac {

/// Inclusive integer range.
struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

struct GenOptions {
  std::size_t n = 16;
  std::uint64_t seed = 0;
  IntRange weight{1, 100};
  IntRange length{1, 10};
  IntRange capacity{1, 5};
  double tau = 1.0;
  bool uniform = false;  // draw one capacity and use it on every edge
};

/**
 * Draws from std::mt19937_64 seeded with `seed`, mapping each raw 64-bit
 * output r to lo + r mod (hi - lo + 1). Order of draws: all weights left to
 * right, then (uniform only) the shared capacity, then per edge its length
 * followed by its capacity (the capacity draw is skipped when uniform).
 * Throws std::invalid_argument on n == 0 or an invalid range.
 */
PathNetwork generate_instance(const GenOptions& options);

}  // namespace evac
