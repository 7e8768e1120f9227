/**
 * @file uniform.hpp
 * @brief Critical-vertex tree for networks whose edges all share one capacity.
 *
 * With a single capacity c the critical vertex of a concatenation is one of the
 * two parts' critical vertices, so each node keeps an O(1) summary built
 * bottom-up, and queries fold O(log n) summaries.
 */

#pragma once

#include <memory>
#include <optional>

#include "evac/cctree.hpp"
#include "evac/model.hpp"
#include "evac/tree_topology.hpp"

namespace evac {

struct UniformSummary {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t l_vertex = 0;  // maximizes d(v_h, v_hi) tau + W[v_lo, v_h] / c
  double l_cost = 0.0;
  std::size_t r_vertex = 0;  // maximizes d(v_lo, v_h) tau + W[v_h, v_hi] / c
  double r_cost = 0.0;
  double weight = 0.0;  // W[v_lo, v_hi]
  double length = 0.0;  // d(v_lo, v_hi)
};

/// Summary of the concatenation of two adjacent spans. Ties go to the smaller vertex.
/// Throws std::invalid_argument unless right.lo == left.hi + 1.
UniformSummary merge_summaries(const UniformSummary& left, const UniformSummary& right,
                               const PrefixIndex& idx);

class UniformTree {
 public:
  /// Throws std::invalid_argument if edge capacities differ.
  explicit UniformTree(std::shared_ptr<const PrefixIndex> index);

  const PrefixIndex& index() const noexcept { return *index_; }
  const TreeTopology& topology() const noexcept { return topo_; }
  double capacity() const noexcept { return capacity_; }
  const UniformSummary& summary(NodeId id) const noexcept { return summaries_[id]; }
  UniformSummary leaf_summary(std::size_t v) const noexcept;

  /// Counted O(1) combine used by the queries; spans must be adjacent.
  UniformSummary merge(const UniformSummary& left, const UniformSummary& right) const noexcept;
  /// Summary of [i, j] folded from canonical nodes.
  UniformSummary fold(std::size_t i, std::size_t j) const noexcept;

  CriticalCandidate theta_L(std::size_t i, std::size_t j) const;
  CriticalCandidate theta_R(std::size_t i, std::size_t j, Point s) const;
  bool l_test(std::size_t i, std::size_t j, double t) const { return within(theta_L(i, j).cost, t); }
  bool r_test(std::size_t i, std::size_t j, Point s, double t) const {
    return within(theta_R(i, j, s).cost, t);
  }

  /// Merges performed while building (n - 1).
  std::uint64_t build_merges() const noexcept { return build_merges_; }

  CriticalCandidate theta_L_unchecked(std::size_t i, std::size_t j) const noexcept;
  CriticalCandidate theta_R_unchecked(std::size_t i, std::size_t j, Point s) const noexcept;

  /// Theta_L of a folded prefix summary (acc.lo = i, acc.hi = j), handling the last-vertex sink.
  CriticalCandidate theta_L_of(const UniformSummary& acc) const noexcept;
  /// Theta_R of summary `acc` over [i, j] (i = acc.lo) for a sink s strictly left of v_i.
  CriticalCandidate theta_R_of(const UniformSummary& acc, Point s) const noexcept;

 private:
  UniformSummary combine(const UniformSummary& left, const UniformSummary& right) const noexcept;

  std::shared_ptr<const PrefixIndex> index_;
  TreeTopology topo_;
  double capacity_ = kInfinity;
  std::vector<UniformSummary> summaries_;
  std::uint64_t build_merges_ = 0;
};

}  // namespace evac
