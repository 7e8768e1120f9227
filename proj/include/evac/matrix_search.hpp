/**
 * @file matrix_search.hpp
 * @brief Locating the optimal k-sink time among the 1-sink optima of all subpaths.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "evac/engine.hpp"

namespace evac {

/**
 * Lazy n x n matrix whose entry (row, col) is the optimal 1-sink time of
 * [v_{n-1-row}, v_col], or 0 when n-1-row > col. Rows and columns are both
 * nondecreasing. Entries are memoized; evaluation is thread-safe.
 */
class OptMatrixView {
 public:
  explicit OptMatrixView(const SinkEngine& engine) : engine_(engine) {}

  std::size_t size() const noexcept { return engine_.size(); }
  double entry(std::size_t row, std::size_t col) const;
  /// Distinct entries that required a 1-sink computation.
  std::uint64_t evaluations() const;

 private:
  const SinkEngine& engine_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, double> cache_;
};

struct SearchStats {
  std::uint64_t entry_evals = 0;
  std::uint64_t feasibility_tests = 0;
};

/// Smallest feasible t for k sinks via prune-and-search over the sorted matrix.
double sorted_matrix_search(const SinkEngine& engine, std::size_t k, SearchStats* stats = nullptr);

/// Same answer by materializing every entry and bisecting the sorted values.
double bisect_search(const SinkEngine& engine, std::size_t k, SearchStats* stats = nullptr);

}  // namespace evac
