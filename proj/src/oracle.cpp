#include "evac/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace evac {

namespace {

void check_range(const PrefixIndex& idx, std::size_t i, std::size_t j) {
  idx.check_vertex(j);
  if (i > j) throw std::out_of_range("oracle requires i <= j");
}

}  // namespace

double oracle_theta_L(const PrefixIndex& idx, std::size_t i, std::size_t j) {
  check_range(idx, i, j);
  const std::size_t n = idx.size();
  // Just right of v_j the sink also sits behind edge j, unless v_j is the last vertex.
  const std::size_t edge_end = j + 1 < n ? j + 1 : j;
  double best = 0.0;
  for (std::size_t h = i; h <= j; ++h) {
    double cap = kInfinity;
    for (std::size_t e = h; e < edge_end; ++e) cap = std::min(cap, idx.edge_capacity(e));
    const double dist = idx.vertex_position(j) - idx.vertex_position(h);
    best = std::max(best, dist * idx.tau() + idx.weight_sum(i, h) / cap);
  }
  return best;
}

double oracle_theta_R(const PrefixIndex& idx, std::size_t i, std::size_t j, Point s) {
  check_range(idx, i, j);
  double best = 0.0;
  for (std::size_t h = i; h <= j; ++h) best = std::max(best, theta_R(idx, h, j, s));
  return best;
}

OracleReport oracle_1sink(const PrefixIndex& idx, std::size_t i, std::size_t j) {
  check_range(idx, i, j);
  const double tau = idx.tau();
  OracleReport best;
  best.method = "per-edge affine";
  best.value = kInfinity;
  best.partition = {{i, j}};

  auto offer = [&](Point p, double value) {
    if (value < best.value) {
      best.value = value;
      best.sinks = {p};
    }
  };

  for (std::size_t v = i; v <= j; ++v) {
    offer(Point::vertex(v), evacuation_time_ref(idx, Point::vertex(v), i, j));
    if (v == j) break;
    // Interior of edge v at offset x: the time is max(a + x tau, b - x tau).
    const std::size_t e = v;
    double a = 0.0;
    double cap = kInfinity;
    for (std::size_t h = e + 1; h-- > i;) {
      cap = std::min(cap, idx.edge_capacity(h));
      const double dist = idx.vertex_position(e) - idx.vertex_position(h);
      a = std::max(a, dist * tau + idx.weight_sum(i, h) / cap);
    }
    double b = 0.0;
    cap = kInfinity;
    for (std::size_t h = e + 1; h <= j; ++h) {
      cap = std::min(cap, idx.edge_capacity(h - 1));
      const double dist = idx.vertex_position(h) - idx.vertex_position(e);
      b = std::max(b, dist * tau + idx.weight_sum(h, j) / cap);
    }
    const double len = idx.edge_length(e);
    const double x = (b - a) / (2.0 * tau);
    // Endpoints are the vertices themselves, already offered with their own (no larger) cost.
    if (x > 0.0 && x < len) {
      const Point p = idx.point_on_edge(e, x);
      if (!p.is_vertex()) offer(p, a + x * tau);
    }
  }
  return best;
}

OracleReport oracle_1sink(const PathNetwork& net, std::size_t i, std::size_t j) {
  return oracle_1sink(PrefixIndex(net), i, j);
}

OracleReport oracle_ksink_dp(const PrefixIndex& idx, std::size_t k) {
  if (k < 1) throw std::invalid_argument("oracle_ksink_dp requires k >= 1");
  const std::size_t n = idx.size();
  OracleReport out;
  out.method = "partition dp";
  if (k >= n) {
    for (std::size_t v = 0; v < n; ++v) {
      out.partition.emplace_back(v, v);
      out.sinks.push_back(Point::vertex(v));
    }
    return out;
  }

  std::vector<std::vector<double>> opt(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) opt[i][j] = oracle_1sink(idx, i, j).value;
  }

  // cost[m][j]: best time for v_0..v_{j-1} with at most m segments; split[m][j] is the last start.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> cost(k + 1, std::vector<double>(n + 1, inf));
  std::vector<std::vector<std::size_t>> split(k + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t m = 0; m <= k; ++m) cost[m][0] = 0.0;
  for (std::size_t m = 1; m <= k; ++m) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const double c = std::max(cost[m - 1][i], opt[i][j - 1]);
        if (c < cost[m][j]) {
          cost[m][j] = c;
          split[m][j] = i;
        }
      }
    }
  }

  out.value = cost[k][n];
  std::size_t j = n;
  for (std::size_t m = k; j > 0; --m) {
    const std::size_t i = split[m][j];
    out.partition.emplace_back(i, j - 1);
    j = i;
  }
  std::reverse(out.partition.begin(), out.partition.end());
  for (auto [a, b] : out.partition) out.sinks.push_back(oracle_1sink(idx, a, b).sinks.front());
  return out;
}

OracleReport oracle_ksink_dp(const PathNetwork& net, std::size_t k) {
  return oracle_ksink_dp(PrefixIndex(net), k);
}

bool oracle_feasible(const PrefixIndex& idx, double t, std::size_t k) {
  if (k < 1) throw std::invalid_argument("oracle_feasible requires k >= 1");
  if (!(t >= 0.0)) return false;
  const std::size_t n = idx.size();
  std::size_t a = 0;
  for (std::size_t used = 0; used < k && a < n; ++used) {
    // Left part: extend while the L-costs toward v_b^+ stay within t.
    std::size_t b = a;
    bool any = false;
    double left = 0.0;
    for (std::size_t cand = a; cand < n; ++cand) {
      const double cost = oracle_theta_L(idx, a, cand);
      if (!within(cost, t)) break;
      b = cand;
      left = cost;
      any = true;
    }
    Point sink = Point::vertex(a);
    if (any) {
      if (b + 1 == n) return true;
      const double len = idx.edge_length(b);
      if ((placement_bound(t) - left) / idx.tau() >= len) {
        sink = Point::vertex(b + 1);
      } else {
        sink = idx.point_on_edge(b, std::clamp((t - left) / idx.tau(), 0.0, len));
      }
    }
    // Right part: extend while the R-costs back to the sink stay within t.
    std::size_t last = b;
    for (std::size_t d = b + 1; d < n; ++d) {
      if (!within(oracle_theta_R(idx, b + 1, d, sink), t)) break;
      last = d;
    }
    a = last + 1;
  }
  return a >= n;
}

bool oracle_feasible(const PathNetwork& net, double t, std::size_t k) {
  return oracle_feasible(PrefixIndex(net), t, k);
}

}  // namespace evac
