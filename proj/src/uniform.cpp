#include "evac/uniform.hpp"

#include <stdexcept>

#include "evac/op_counters.hpp"

namespace evac {

namespace {

UniformSummary combine_with(const UniformSummary& left, const UniformSummary& right, double gap,
                            double tau, double c) noexcept {
  UniformSummary out;
  out.lo = left.lo;
  out.hi = right.hi;
  out.weight = left.weight + right.weight;
  out.length = left.length + gap + right.length;

  // Left cluster pays the extra walk to right.hi; right cluster queues behind left's weight.
  const double via_left = left.l_cost + (gap + right.length) * tau;
  const double via_right = right.l_cost + left.weight / c;
  if (via_left >= via_right) {
    out.l_vertex = left.l_vertex;
    out.l_cost = via_left;
  } else {
    out.l_vertex = right.l_vertex;
    out.l_cost = via_right;
  }

  const double r_via_right = right.r_cost + (left.length + gap) * tau;
  const double r_via_left = left.r_cost + right.weight / c;
  if (r_via_left >= r_via_right) {
    out.r_vertex = left.r_vertex;
    out.r_cost = r_via_left;
  } else {
    out.r_vertex = right.r_vertex;
    out.r_cost = r_via_right;
  }
  return out;
}

}  // namespace

UniformSummary merge_summaries(const UniformSummary& left, const UniformSummary& right,
                               const PrefixIndex& idx) {
  if (right.lo != left.hi + 1 || right.hi >= idx.size()) {
    throw std::invalid_argument("merge_summaries: spans are not adjacent");
  }
  return combine_with(left, right, idx.edge_length(left.hi), idx.tau(), idx.edge_capacity(left.hi));
}

UniformTree::UniformTree(std::shared_ptr<const PrefixIndex> index)
    : index_(std::move(index)), topo_(index_->size()) {
  const PathNetwork& net = index_->network();
  if (!net.uniform_capacity()) {
    throw std::invalid_argument("uniform backend requires equal edge capacities");
  }
  if (!net.edges.empty()) capacity_ = net.edges.front().capacity;

  summaries_.resize(topo_.node_count());
  // Children have larger ids than parents, so a reverse sweep is bottom-up.
  for (NodeId id = static_cast<NodeId>(topo_.node_count()); id-- > 0;) {
    const TreeNode& nd = topo_.node(id);
    if (nd.leaf()) {
      summaries_[id] = leaf_summary(nd.lo);
    } else {
      summaries_[id] = combine(summaries_[nd.left], summaries_[nd.right]);
      ++build_merges_;
    }
  }
}

UniformSummary UniformTree::leaf_summary(std::size_t v) const noexcept {
  const double w = index_->weight(v);
  return {v, v, v, w / capacity_, v, w / capacity_, w, 0.0};
}

UniformSummary UniformTree::combine(const UniformSummary& left,
                                    const UniformSummary& right) const noexcept {
  return combine_with(left, right, index_->edge_length(left.hi), index_->tau(), capacity_);
}

UniformSummary UniformTree::merge(const UniformSummary& left,
                                  const UniformSummary& right) const noexcept {
  ++op_counters().candidate_evals;
  return combine(left, right);
}

UniformSummary UniformTree::fold(std::size_t i, std::size_t j) const noexcept {
  UniformSummary acc;
  bool first = true;
  topo_.for_each_canonical(i, j, [&](NodeId id) {
    ++op_counters().candidate_evals;
    if (first) {
      acc = summaries_[id];
      first = false;
    } else {
      acc = combine(acc, summaries_[id]);
    }
  });
  return acc;
}

CriticalCandidate UniformTree::theta_L_of(const UniformSummary& acc) const noexcept {
  if (acc.hi + 1 < index_->size()) return {acc.l_vertex, acc.l_cost};
  // Sink exactly at the last vertex: its own evacuees cost nothing.
  if (acc.lo == acc.hi) return {acc.hi, 0.0};
  const UniformSummary head = fold(acc.lo, acc.hi - 1);
  return {head.l_vertex, head.l_cost + index_->edge_length(acc.hi - 1) * index_->tau()};
}

CriticalCandidate UniformTree::theta_R_of(const UniformSummary& acc, Point s) const noexcept {
  return {acc.r_vertex,
          acc.r_cost + (index_->vertex_position(acc.lo) - index_->position(s)) * index_->tau()};
}

CriticalCandidate UniformTree::theta_L_unchecked(std::size_t i, std::size_t j) const noexcept {
  if (j + 1 == index_->size()) {
    if (i == j) return {j, 0.0};
    const UniformSummary head = fold(i, j - 1);
    return {head.l_vertex, head.l_cost + index_->edge_length(j - 1) * index_->tau()};
  }
  const UniformSummary acc = fold(i, j);
  return {acc.l_vertex, acc.l_cost};
}

CriticalCandidate UniformTree::theta_R_unchecked(std::size_t i, std::size_t j,
                                                 Point s) const noexcept {
  if (s == Point::vertex(i)) {
    if (i == j) return {i, 0.0};
    const UniformSummary tail = fold(i + 1, j);
    const double cost = tail.r_cost + index_->edge_length(i) * index_->tau();
    return cost > 0.0 ? CriticalCandidate{tail.r_vertex, cost} : CriticalCandidate{i, 0.0};
  }
  return theta_R_of(fold(i, j), s);
}

CriticalCandidate UniformTree::theta_L(std::size_t i, std::size_t j) const {
  index_->check_vertex(j);
  if (i > j) throw std::out_of_range("theta_L requires i <= j");
  return theta_L_unchecked(i, j);
}

CriticalCandidate UniformTree::theta_R(std::size_t i, std::size_t j, Point s) const {
  index_->check_vertex(j);
  index_->check_point(s);
  if (i > j) throw std::out_of_range("theta_R requires i <= j");
  if (Point::vertex(i) < s) throw std::invalid_argument("theta_R requires s <= v_i");
  return theta_R_unchecked(i, j, s);
}

}  // namespace evac
