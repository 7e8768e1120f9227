#include "evac/tree_topology.hpp"

#include <stdexcept>
#include <string>

namespace evac {

TreeTopology::TreeTopology(std::size_t n) : leaf_of_(n, kNoNode) {
  if (n == 0) throw std::invalid_argument("tree over an empty path");
  nodes_.reserve(2 * n - 1);
  build(0, n - 1, kNoNode, 0);
}

NodeId TreeTopology::build(std::size_t lo, std::size_t hi, NodeId parent, std::uint32_t depth) {
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({lo, hi, kNoNode, kNoNode, parent, depth});
  if (depth > height_) height_ = depth;
  if (lo == hi) {
    leaf_of_[lo] = id;
    return id;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const NodeId left = build(lo, mid, id, depth + 1);
  const NodeId right = build(mid + 1, hi, id, depth + 1);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

NodeId TreeTopology::lowest_common_ancestor(NodeId a, NodeId b) const noexcept {
  while (nodes_[a].depth > nodes_[b].depth) a = nodes_[a].parent;
  while (nodes_[b].depth > nodes_[a].depth) b = nodes_[b].parent;
  while (a != b) {
    a = nodes_[a].parent;
    b = nodes_[b].parent;
  }
  return a;
}

std::vector<NodeId> TreeTopology::canonical_nodes(std::size_t i, std::size_t j) const {
  if (i > j || j >= vertex_count()) {
    throw std::out_of_range("canonical_nodes: bad range [" + std::to_string(i) + ", " +
                            std::to_string(j) + "]");
  }
  std::vector<NodeId> out;
  for_each_canonical(i, j, [&](NodeId id) { out.push_back(id); });
  return out;
}

}  // namespace evac
