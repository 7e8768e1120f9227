/**
 * @file cctree.hpp
 * @brief Critical-cluster tree for general edge capacities.
 *
 * Every node over [l, r] stores, built directly from the index:
 *  - suffix capacities c(v_h, v_r) for h in [l, r-1] (nondecreasing in h),
 *  - prefix capacities c(v_l, v_h) for h in [l+1, r] (nonincreasing in h),
 *  - the left/right weight tables and left/right capacity tables, each an
 *    upper envelope with one input line per spanned vertex.
 *
 * With these, the maximizing vertex of
 *   cost_L(W, C) = max_h d(v_h, v_r) tau + (W + W[v_l, v_h]) / min(c(v_h, v_r), C)
 * (and its mirror cost_R) is found with one binary search and two envelope
 * queries, so a Theta query over O(log n) canonical nodes costs O(log^2 n).
 */

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "evac/envelope.hpp"
#include "evac/model.hpp"
#include "evac/tree_topology.hpp"

namespace evac {

struct CriticalCandidate {
  std::size_t vertex = 0;
  double cost = 0.0;
};

class CCTree {
 public:
  explicit CCTree(std::shared_ptr<const PrefixIndex> index);

  const PrefixIndex& index() const noexcept { return *index_; }
  const TreeTopology& topology() const noexcept { return topo_; }

  /// Node-local L-critical candidate for prefix weight W and boundary capacity C (C may be +inf).
  CriticalCandidate cost_L_node(NodeId id, double W, double C) const noexcept;
  /// Mirror image: suffix weight W, capacity C from the sink to v_l.
  CriticalCandidate cost_R_node(NodeId id, double W, double C) const noexcept;

  /// Theta_L(v_i, v_j): sink at v_j^+ (exactly v_{n-1} when j is the last vertex).
  CriticalCandidate theta_L(std::size_t i, std::size_t j) const;
  /// Theta_R(v_i, v_j, s) for a sink s at or left of v_i.
  CriticalCandidate theta_R(std::size_t i, std::size_t j, Point s) const;

  bool l_test(std::size_t i, std::size_t j, double t) const { return within(theta_L(i, j).cost, t); }
  bool r_test(std::size_t i, std::size_t j, Point s, double t) const {
    return within(theta_R(i, j, s).cost, t);
  }

  std::span<const double> suffix_capacities(NodeId id) const noexcept;
  std::span<const double> prefix_capacities(NodeId id) const noexcept;
  EnvelopeView left_weight_table(NodeId id) const noexcept { return table(kLeftWeight, id); }
  EnvelopeView left_capacity_table(NodeId id) const noexcept { return table(kLeftCapacity, id); }
  EnvelopeView right_weight_table(NodeId id) const noexcept { return table(kRightWeight, id); }
  EnvelopeView right_capacity_table(NodeId id) const noexcept { return table(kRightCapacity, id); }

  /// Line pushes and pops performed while building all envelope tables.
  std::uint64_t build_work() const noexcept { return build_work_; }

  // Unchecked query forms used by the solver's hot paths.
  CriticalCandidate theta_L_unchecked(std::size_t i, std::size_t j) const noexcept;
  CriticalCandidate theta_R_unchecked(std::size_t i, std::size_t j, Point s) const noexcept;

 private:
  enum TableKind { kLeftWeight = 0, kLeftCapacity, kRightWeight, kRightCapacity, kTableKinds };

  struct Table {
    std::vector<Line> lines;
    std::vector<double> breaks;
    std::vector<std::uint64_t> offset;  // per node, into lines/breaks
    std::vector<std::uint32_t> count;
  };

  void build_node(NodeId id, std::vector<Line>& scratch);
  EnvelopeView table(TableKind kind, NodeId id) const noexcept;

  std::shared_ptr<const PrefixIndex> index_;
  TreeTopology topo_;
  std::vector<double> suffix_caps_;  // node id's block starts at cap_offset_[id]
  std::vector<double> prefix_caps_;
  std::vector<std::uint64_t> cap_offset_;
  Table tables_[kTableKinds];
  std::uint64_t build_work_ = 0;
};

}  // namespace evac
