#include "evac/cctree.hpp"

#include <algorithm>
#include <stdexcept>

#include "evac/op_counters.hpp"

namespace evac {

CCTree::CCTree(std::shared_ptr<const PrefixIndex> index)
    : index_(std::move(index)), topo_(index_->size()) {
  const std::size_t nodes = topo_.node_count();
  cap_offset_.resize(nodes);
  for (Table& t : tables_) {
    t.offset.resize(nodes);
    t.count.resize(nodes);
  }
  std::vector<Line> scratch;
  for (NodeId id = 0; id < nodes; ++id) build_node(id, scratch);
  for (Table& t : tables_) {
    t.lines.shrink_to_fit();
    t.breaks.shrink_to_fit();
  }
}

void CCTree::build_node(NodeId id, std::vector<Line>& scratch) {
  const PrefixIndex& idx = *index_;
  const TreeNode& nd = topo_.node(id);
  const std::size_t lo = nd.lo;
  const std::size_t hi = nd.hi;
  const std::size_t m = nd.span();
  const double tau = idx.tau();

  // Suffix minima c(v_h, v_hi) for h < hi, prefix minima c(v_lo, v_h) for h > lo.
  cap_offset_[id] = suffix_caps_.size();
  suffix_caps_.resize(suffix_caps_.size() + (m - 1));
  prefix_caps_.resize(prefix_caps_.size() + (m - 1));
  double* suffix = suffix_caps_.data() + cap_offset_[id];
  double* prefix = prefix_caps_.data() + cap_offset_[id];
  double running = kInfinity;
  for (std::size_t h = hi; h-- > lo;) {
    running = std::min(running, idx.edge_capacity(h));
    suffix[h - lo] = running;
  }
  running = kInfinity;
  for (std::size_t h = lo + 1; h <= hi; ++h) {
    running = std::min(running, idx.edge_capacity(h - 1));
    prefix[h - lo - 1] = running;
  }

  auto emit = [&](TableKind kind, SlopeOrder order) {
    Table& t = tables_[kind];
    t.offset[id] = t.lines.size();
    t.count[id] = static_cast<std::uint32_t>(
        append_upper_envelope(scratch, order, t.lines, t.breaks, &build_work_));
  };

  const double right_end = idx.vertex_position(hi);
  const double left_end = idx.vertex_position(lo);

  // Left weight table: slope 1/c(v_h, v_hi) falls as h grows.
  scratch.clear();
  for (std::size_t h = lo; h <= hi; ++h) {
    const double c = h < hi ? suffix[h - lo] : kInfinity;
    const double inv = 1.0 / c;
    scratch.push_back({inv, (right_end - idx.vertex_position(h)) * tau + idx.weight_sum(lo, h) * inv,
                       static_cast<std::uint32_t>(h)});
  }
  emit(kLeftWeight, SlopeOrder::nonincreasing);

  // Left capacity table: slope W[v_lo, v_h] grows with h; queried at 1/C.
  scratch.clear();
  for (std::size_t h = lo; h <= hi; ++h) {
    scratch.push_back({idx.weight_sum(lo, h), (right_end - idx.vertex_position(h)) * tau,
                       static_cast<std::uint32_t>(h)});
  }
  emit(kLeftCapacity, SlopeOrder::nondecreasing);

  scratch.clear();
  for (std::size_t h = lo; h <= hi; ++h) {
    const double c = h > lo ? prefix[h - lo - 1] : kInfinity;
    const double inv = 1.0 / c;
    scratch.push_back({inv, (idx.vertex_position(h) - left_end) * tau + idx.weight_sum(h, hi) * inv,
                       static_cast<std::uint32_t>(h)});
  }
  emit(kRightWeight, SlopeOrder::nondecreasing);

  scratch.clear();
  for (std::size_t h = lo; h <= hi; ++h) {
    scratch.push_back({idx.weight_sum(h, hi), (idx.vertex_position(h) - left_end) * tau,
                       static_cast<std::uint32_t>(h)});
  }
  emit(kRightCapacity, SlopeOrder::nonincreasing);
}

EnvelopeView CCTree::table(TableKind kind, NodeId id) const noexcept {
  const Table& t = tables_[kind];
  const std::size_t off = t.offset[id];
  const std::size_t cnt = t.count[id];
  return {std::span<const Line>(t.lines.data() + off, cnt),
          std::span<const double>(t.breaks.data() + off, cnt)};
}

std::span<const double> CCTree::suffix_capacities(NodeId id) const noexcept {
  return {suffix_caps_.data() + cap_offset_[id], topo_.node(id).span() - 1};
}

std::span<const double> CCTree::prefix_capacities(NodeId id) const noexcept {
  return {prefix_caps_.data() + cap_offset_[id], topo_.node(id).span() - 1};
}

namespace {

// Exhaustive node scan; only reached when rounding makes the two table answers
// contradict each other.
template <class Cost>
CriticalCandidate scan_node(std::size_t lo, std::size_t hi, Cost cost) {
  CriticalCandidate best{lo, cost(lo)};
  for (std::size_t h = lo + 1; h <= hi; ++h) {
    const double c = cost(h);
    if (c > best.cost) best = {h, c};
  }
  return best;
}

}  // namespace

CriticalCandidate CCTree::cost_L_node(NodeId id, double W, double C) const noexcept {
  ++op_counters().candidate_evals;
  const TreeNode& nd = topo_.node(id);
  if (nd.leaf()) return {nd.lo, (W + index_->weight(nd.lo)) / C};

  const EnvelopeHit by_weight = left_weight_table(id).query(W);
  if (C == kInfinity) return {by_weight.tag, by_weight.value};

  // P1 = [lo, p2_begin) has c(v_h, v_hi) <= C; P2 = [p2_begin, hi] is capped by C.
  const auto caps = suffix_capacities(id);
  const std::size_t p2_begin =
      nd.lo + static_cast<std::size_t>(std::upper_bound(caps.begin(), caps.end(), C) - caps.begin());
  const EnvelopeHit by_cap = left_capacity_table(id).query(1.0 / C);
  const double cap_cost = by_cap.value + W / C;

  const bool weight_in_p2 = by_weight.tag >= p2_begin;
  const bool cap_in_p2 = by_cap.tag >= p2_begin;
  if (weight_in_p2 && !cap_in_p2) {
    ++op_counters().exclusivity_violations;
    const PrefixIndex& idx = *index_;
    const double right_end = idx.vertex_position(nd.hi);
    return scan_node(nd.lo, nd.hi, [&](std::size_t h) {
      const double c = h < nd.hi ? std::min(caps[h - nd.lo], C) : C;
      return (right_end - idx.vertex_position(h)) * idx.tau() + (W + idx.weight_sum(nd.lo, h)) / c;
    });
  }
  if (weight_in_p2) return {by_cap.tag, cap_cost};
  if (!cap_in_p2) return {by_weight.tag, by_weight.value};
  // by_weight is in P1, left of by_cap: ties go to it.
  return by_weight.value >= cap_cost ? CriticalCandidate{by_weight.tag, by_weight.value}
                                     : CriticalCandidate{by_cap.tag, cap_cost};
}

CriticalCandidate CCTree::cost_R_node(NodeId id, double W, double C) const noexcept {
  ++op_counters().candidate_evals;
  const TreeNode& nd = topo_.node(id);
  if (nd.leaf()) return {nd.lo, (W + index_->weight(nd.lo)) / C};

  const EnvelopeHit by_weight = right_weight_table(id).query(W);
  if (C == kInfinity) return {by_weight.tag, by_weight.value};

  // Mirror: P2 = [lo, p1_begin) is capped by C; P1 = [p1_begin, hi] has c(v_lo, v_h) <= C.
  const auto caps = prefix_capacities(id);
  const std::size_t p1_begin =
      nd.lo + 1 +
      static_cast<std::size_t>(
          std::partition_point(caps.begin(), caps.end(), [C](double c) { return c > C; }) -
          caps.begin());
  const EnvelopeHit by_cap = right_capacity_table(id).query(1.0 / C);
  const double cap_cost = by_cap.value + W / C;

  const bool weight_in_p2 = by_weight.tag < p1_begin;
  const bool cap_in_p2 = by_cap.tag < p1_begin;
  if (weight_in_p2 && !cap_in_p2) {
    ++op_counters().exclusivity_violations;
    const PrefixIndex& idx = *index_;
    const double left_end = idx.vertex_position(nd.lo);
    return scan_node(nd.lo, nd.hi, [&](std::size_t h) {
      const double c = h > nd.lo ? std::min(caps[h - nd.lo - 1], C) : C;
      return (idx.vertex_position(h) - left_end) * idx.tau() + (W + idx.weight_sum(h, nd.hi)) / c;
    });
  }
  if (weight_in_p2) return {by_cap.tag, cap_cost};
  if (!cap_in_p2) return {by_weight.tag, by_weight.value};
  // by_cap is in P2, left of by_weight: ties go to it.
  return cap_cost >= by_weight.value ? CriticalCandidate{by_cap.tag, cap_cost}
                                     : CriticalCandidate{by_weight.tag, by_weight.value};
}

CriticalCandidate CCTree::theta_L_unchecked(std::size_t i, std::size_t j) const noexcept {
  const PrefixIndex& idx = *index_;
  const bool last = j + 1 == idx.size();
  const double sink_pos = idx.vertex_position(j);
  CriticalCandidate best{i, -1.0};
  topo_.for_each_canonical(i, j, [&](NodeId id) {
    const TreeNode& nd = topo_.node(id);
    const double W = nd.lo > i ? idx.weight_sum(i, nd.lo - 1) : 0.0;
    // Boundary capacity c(v_r, v_j^+): edges r..j, or r..j-1 when v_j is the last vertex.
    const double C = !last ? idx.min_capacity(nd.hi, j)
                           : (nd.hi < j ? idx.min_capacity(nd.hi, j - 1) : kInfinity);
    const CriticalCandidate cand = cost_L_node(id, W, C);
    const double cost = cand.cost + (sink_pos - idx.vertex_position(nd.hi)) * idx.tau();
    if (cost > best.cost) best = {cand.vertex, cost};
  });
  return best;
}

CriticalCandidate CCTree::theta_R_unchecked(std::size_t i, std::size_t j, Point s) const noexcept {
  const PrefixIndex& idx = *index_;
  const double sink_pos = idx.position(s);
  CriticalCandidate best{i, -1.0};
  topo_.for_each_canonical(i, j, [&](NodeId id) {
    const TreeNode& nd = topo_.node(id);
    const double W = nd.hi < j ? idx.weight_sum(nd.hi + 1, j) : 0.0;
    // c(s, v_l): edges from s's edge through l-1; none when s is v_l itself.
    const double C = s == Point::vertex(nd.lo) ? kInfinity : idx.min_capacity(s.index(), nd.lo - 1);
    const CriticalCandidate cand = cost_R_node(id, W, C);
    const double cost = cand.cost + (idx.vertex_position(nd.lo) - sink_pos) * idx.tau();
    if (cost > best.cost) best = {cand.vertex, cost};
  });
  return best;
}

CriticalCandidate CCTree::theta_L(std::size_t i, std::size_t j) const {
  index_->check_vertex(j);
  if (i > j) throw std::out_of_range("theta_L requires i <= j");
  return theta_L_unchecked(i, j);
}

CriticalCandidate CCTree::theta_R(std::size_t i, std::size_t j, Point s) const {
  index_->check_vertex(j);
  index_->check_point(s);
  if (i > j) throw std::out_of_range("theta_R requires i <= j");
  if (Point::vertex(i) < s) throw std::invalid_argument("theta_R requires s <= v_i");
  return theta_R_unchecked(i, j, s);
}

}  // namespace evac
