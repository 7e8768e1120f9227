/**
 * @file oracle.hpp
 * @brief Brute-force references built on the model layer alone.
 *
 * Nothing here touches the trees or envelopes, so a bug there cannot hide
 * behind a matching bug in the reference.
 */

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "evac/model.hpp"

namespace evac {

struct OracleReport {
  double value = 0.0;
  std::vector<Point> sinks;                                    // one per segment
  std::vector<std::pair<std::size_t, std::size_t>> partition;  // 0-based inclusive ranges
  std::string method;
};

/// Optimal single sink for [v_i, v_j] from exact per-edge affine cost functions. O(n^2).
OracleReport oracle_1sink(const PrefixIndex& idx, std::size_t i, std::size_t j);
OracleReport oracle_1sink(const PathNetwork& net, std::size_t i, std::size_t j);

/// Exact optimum over all partitions into at most k contiguous segments.
OracleReport oracle_ksink_dp(const PrefixIndex& idx, std::size_t k);
OracleReport oracle_ksink_dp(const PathNetwork& net, std::size_t k);

/// Greedy (t, k)-feasibility with every cost computed by a direct scan.
bool oracle_feasible(const PrefixIndex& idx, double t, std::size_t k);
bool oracle_feasible(const PathNetwork& net, double t, std::size_t k);

/// Max L-cost of [v_i, v_j] with the sink just right of v_j (or at v_j when j is last).
double oracle_theta_L(const PrefixIndex& idx, std::size_t i, std::size_t j);
/// Max R-cost of [v_i, v_j] for a sink s at or left of v_i.
double oracle_theta_R(const PrefixIndex& idx, std::size_t i, std::size_t j, Point s);

}  // namespace evac
