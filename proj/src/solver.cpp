#include "evac/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "evac/matrix_search.hpp"
#include "evac/op_counters.hpp"

namespace evac {

std::vector<Point> SolvePlan::sinks() const {
  std::vector<Point> out;
  out.reserve(segments.size());
  for (const Segment& seg : segments) out.push_back(seg.sink);
  return out;
}

namespace {

/**
 * Up-then-down walk for the largest j >= start with probe.covers() passing
 * for [start, j]. covers(u) asks whether coverage can extend through u's
 * right end; it is always called with u.lo one past the current coverage.
 * Returns nullopt if start alone fails.
 */
template <class Probe>
std::optional<std::size_t> extend_right(const TreeTopology& topo, std::size_t start, Probe& probe) {
  NodeId u = topo.leaf(start);
  if (!probe.covers(u)) return std::nullopt;
  while (u != topo.root()) {
    const NodeId up = topo.node(u).parent;
    const TreeNode& parent = topo.node(up);
    if (parent.left == u && !probe.covers(parent.right)) {
      NodeId x = parent.right;
      while (!topo.node(x).leaf()) {
        const TreeNode& nd = topo.node(x);
        x = probe.covers(nd.left) ? nd.right : nd.left;
      }
      return topo.node(x).lo - 1;
    }
    u = up;
  }
  return topo.vertex_count() - 1;
}

struct GeneralLProbe {
  const CCTree& tree;
  std::size_t a;
  double t;
  double last_cost = 0.0;

  bool covers(NodeId u) {
    const double cost = tree.theta_L_unchecked(a, tree.topology().node(u).hi).cost;
    if (!within(cost, t)) return false;
    last_cost = cost;
    return true;
  }
};

struct UniformLProbe {
  const UniformTree& tree;
  std::size_t a;
  double t;
  double last_cost = 0.0;
  UniformSummary acc{};
  bool started = false;

  bool covers(NodeId u) {
    UniformSummary next;
    if (started) {
      next = tree.merge(acc, tree.summary(u));
    } else {
      ++op_counters().candidate_evals;
      next = tree.summary(u);
    }
    const double cost = tree.theta_L_of(next).cost;
    if (!within(cost, t)) return false;
    acc = next;
    started = true;
    last_cost = cost;
    return true;
  }
};

struct GeneralRProbe {
  const CCTree& tree;
  std::size_t c;
  Point s;
  double t;

  bool covers(NodeId u) {
    return within(tree.theta_R_unchecked(c, tree.topology().node(u).hi, s).cost, t);
  }
};

// Running summary of [c, ..]; when the sink sits on v_c itself, v_c costs
// nothing and the summary starts at c + 1 instead.
struct UniformRProbe {
  const UniformTree& tree;
  std::size_t c;
  Point s;
  double t;
  bool sink_on_first = false;
  UniformSummary acc{};
  bool started = false;

  bool covers(NodeId u) {
    if (sink_on_first && tree.topology().node(u).hi == c) return true;
    UniformSummary next;
    if (started) {
      next = tree.merge(acc, tree.summary(u));
    } else {
      ++op_counters().candidate_evals;
      next = tree.summary(u);
    }
    const PrefixIndex& idx = tree.index();
    const double cost = sink_on_first ? next.r_cost + idx.edge_length(c) * idx.tau()
                                      : tree.theta_R_of(next, s).cost;
    if (!within(cost, t)) return false;
    acc = next;
    started = true;
    return true;
  }
};

}  // namespace

Segment isolate_subpath(const SinkEngine& engine, double t, std::size_t a) {
  const PrefixIndex& idx = engine.index();
  const std::size_t n = idx.size();
  idx.check_vertex(a);
  if (!(t >= 0.0)) throw std::invalid_argument("isolate_subpath requires t >= 0");
  const TreeTopology& topo = engine.topology();

  std::optional<std::size_t> b;
  double left_cost = 0.0;
  if (const CCTree* tree = engine.general_tree()) {
    GeneralLProbe probe{*tree, a, t};
    b = extend_right(topo, a, probe);
    left_cost = probe.last_cost;
  } else {
    UniformLProbe probe{*engine.uniform_tree(), a, t};
    b = extend_right(topo, a, probe);
    left_cost = probe.last_cost;
  }

  Segment seg;
  seg.first = a;
  if (!b) {
    seg.left_end = a;
    seg.sink = Point::vertex(a);
  } else {
    seg.left_end = *b;
    if (*b + 1 == n) {
      seg.sink = Point::vertex(n - 1);
    } else {
      // Rightmost sink on [v_b, v_{b+1}] keeping every left cost within t;
      // the left cost grows by tau per unit moved along edge b.
      // The far vertex wins ties, which matters on zero-length edges.
      const double len = idx.edge_length(*b);
      if ((placement_bound(t) - left_cost) / idx.tau() >= len) {
        seg.sink = Point::vertex(*b + 1);
      } else {
        seg.sink = idx.point_on_edge(*b, std::clamp((t - left_cost) / idx.tau(), 0.0, len));
      }
    }
  }

  seg.last = seg.left_end;
  if (seg.left_end + 1 == n) return seg;

  const std::size_t c = seg.left_end + 1;
  std::optional<std::size_t> d;
  if (const CCTree* tree = engine.general_tree()) {
    GeneralRProbe probe{*tree, c, seg.sink, t};
    d = extend_right(topo, c, probe);
  } else {
    UniformRProbe probe{*engine.uniform_tree(), c, seg.sink, t, seg.sink == Point::vertex(c)};
    d = extend_right(topo, c, probe);
  }
  if (d) {
    seg.last = *d;
  } else if (seg.sink.index() == seg.left_end) {
    // Nothing joins from the right, so keep the sink inside the segment.
    seg.sink = Point::vertex(seg.left_end);
  }
  return seg;
}

bool segment_is_maximal(const SinkEngine& engine, const Segment& seg, double t) {
  const std::size_t n = engine.size();
  if (seg.left_end + 1 < n && engine.l_test(seg.first, seg.left_end + 1, t)) return false;
  if (seg.last + 1 < n && engine.r_test(seg.left_end + 1, seg.last + 1, seg.sink, t)) return false;
  return true;
}

OneSink find_1sink(const SinkEngine& engine, std::size_t i, std::size_t j) {
  const PrefixIndex& idx = engine.index();
  idx.check_vertex(j);
  if (i > j) throw std::out_of_range("find_1sink requires i <= j");
  if (i == j) return {Point::vertex(i), 0.0};

  const double tau = idx.tau();
  // Sink just right of v_e, and sink exactly at v_e.
  auto left_cost = [&](std::size_t e) { return engine.theta_L_unchecked(i, e).cost; };
  auto right_cost = [&](std::size_t e) {
    return engine.theta_R_unchecked(e + 1, j, Point::vertex(e)).cost;
  };

  const TreeTopology& topo = engine.topology();
  NodeId u = topo.lowest_common_ancestor(topo.leaf(i), topo.leaf(j));
  while (!topo.node(u).leaf()) {
    const TreeNode& nd = topo.node(u);
    const std::size_t e = topo.node(nd.left).hi;  // edge between the two children
    if (e < i) {
      u = nd.right;
      continue;
    }
    if (e >= j) {
      u = nd.left;
      continue;
    }
    // Inside edge e at offset x the time is max(f + x tau, g - x tau).
    const double f = left_cost(e);
    const double g = right_cost(e);
    const double len = idx.edge_length(e);
    if (f > g) {
      u = nd.left;
    } else if (f + len * tau < g - len * tau) {
      u = nd.right;
    } else {
      const double x = std::clamp((g - f) / (2.0 * tau), 0.0, len);
      return {idx.point_on_edge(e, x), f + x * tau};
    }
  }

  // No crossing inside an edge: the optimum is the vertex separating the
  // right-dominated edges from the left-dominated ones.
  const std::size_t m = topo.node(u).lo;
  const double from_left = m > i ? left_cost(m - 1) + idx.edge_length(m - 1) * tau : 0.0;
  const double from_right = m < j ? right_cost(m) : 0.0;
  return {Point::vertex(m), std::max(from_left, from_right)};
}

Feasibility feasible(const SinkEngine& engine, double t, std::size_t k, bool check_invariants) {
  if (k < 1) throw std::invalid_argument("feasible requires k >= 1");
  ++op_counters().feasibility_tests;
  Feasibility out;
  if (!(t >= 0.0)) return out;

  const std::size_t n = engine.size();
  SolvePlan plan;
  plan.k = k;
  plan.time = t;
  std::size_t a = 0;
  for (std::size_t used = 0; used < k && a < n; ++used) {
    Segment seg = isolate_subpath(engine, t, a);
    if (check_invariants && !segment_is_maximal(engine, seg, t)) {
      ++op_counters().maximality_violations;
    }
    a = seg.last + 1;
    plan.segments.push_back(seg);
  }
  if (a >= n) {
    out.feasible = true;
    out.plan = std::move(plan);
  }
  return out;
}

SolvePlan solve_ksink(const SinkEngine& engine, std::size_t k, const SolveOptions& options) {
  if (k < 1) throw std::invalid_argument("solve_ksink requires k >= 1");
  const std::size_t n = engine.size();
  const std::size_t sinks = std::min(k, n);

  if (sinks == n) {
    SolvePlan plan;
    plan.k = k;
    plan.time = 0.0;
    for (std::size_t v = 0; v < n; ++v) plan.segments.push_back({v, v, Point::vertex(v), v});
    return plan;
  }

  const double tstar = options.optimizer == Optimizer::bisect ? bisect_search(engine, sinks)
                                                              : sorted_matrix_search(engine, sinks);
  Feasibility result = feasible(engine, tstar, sinks, options.check_invariants);
  if (!result.feasible) {
    throw std::logic_error("optimum " + std::to_string(tstar) + " failed its feasibility test");
  }
  SolvePlan plan = std::move(*result.plan);
  plan.k = k;
  plan.time = tstar;
  return plan;
}

SolvePlan solve_ksink(const PathNetwork& net, std::size_t k, const SolveOptions& options) {
  const SinkEngine engine(net, options.backend);
  return solve_ksink(engine, k, options);
}

}  // namespace evac
