/**
 * @file tree_topology.hpp
 * @brief Balanced binary tree over vertex indices, shared by both query backends.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace evac {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

struct TreeNode {
  std::size_t lo = 0;  // leftmost vertex spanned
  std::size_t hi = 0;  // rightmost vertex spanned
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  NodeId parent = kNoNode;
  std::uint32_t depth = 0;

  bool leaf() const noexcept { return left == kNoNode; }
  std::size_t span() const noexcept { return hi - lo + 1; }
};

/**
 * Leaves are the vertices in path order. Each internal node over [lo, hi]
 * splits at mid = (lo + hi) / 2, which gives height ceil(log2 n). Node 0 is
 * the root; children always have larger ids than their parent.
 */
class TreeTopology {
 public:
  explicit TreeTopology(std::size_t n);

  std::size_t vertex_count() const noexcept { return leaf_of_.size(); }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  NodeId root() const noexcept { return 0; }
  const TreeNode& node(NodeId id) const noexcept { return nodes_[id]; }
  NodeId leaf(std::size_t v) const noexcept { return leaf_of_[v]; }
  std::uint32_t height() const noexcept { return height_; }

  NodeId lowest_common_ancestor(NodeId a, NodeId b) const noexcept;

  /// Highest nodes whose spans partition [i, j], left to right.
  std::vector<NodeId> canonical_nodes(std::size_t i, std::size_t j) const;

  /// Calls f(id) for each canonical node of [i, j], left to right. Unchecked.
  template <class F>
  void for_each_canonical(std::size_t i, std::size_t j, F&& f) const {
    NodeId stack[2 * 64];
    int top = 0;
    stack[top++] = root();
    while (top > 0) {
      const NodeId id = stack[--top];
      const TreeNode& nd = nodes_[id];
      if (nd.hi < i || nd.lo > j) continue;
      if (i <= nd.lo && nd.hi <= j) {
        f(id);
        continue;
      }
      stack[top++] = nd.right;
      stack[top++] = nd.left;
    }
  }

 private:
  NodeId build(std::size_t lo, std::size_t hi, NodeId parent, std::uint32_t depth);

  std::vector<TreeNode> nodes_;
  std::vector<NodeId> leaf_of_;
  std::uint32_t height_ = 0;
};

}  // namespace evac
