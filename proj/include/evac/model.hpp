/**
 * @file model.hpp
 * @brief Dynamic path networks, points on them, and the evacuation cost primitives.
 *
 * Vertices are numbered 0..n-1 from left to right; edge e joins vertex e and
 * vertex e+1. Text formats (instances, plans) use 1-based numbering.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evac {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Every comparison of a computed cost against a time bound goes through here.
inline bool within(double cost, double bound) noexcept {
  return cost <= bound * (1.0 + 1e-9) + 1e-12;
}

// Bound used when placing a sink as far right as time t allows. Slightly
// above t so rounding cannot stop a sink just short of a vertex, yet far
// inside the tolerance of within().
inline double placement_bound(double t) noexcept { return t * (1.0 + 1e-11) + 1e-13; }

struct Edge {
  double length = 0.0;
  double capacity = 1.0;
};

struct PathNetwork {
  double tau = 1.0;             // transit time per unit distance
  std::vector<double> weights;  // evacuees per vertex
  std::vector<Edge> edges;      // edges.size() == weights.size() - 1

  std::size_t size() const noexcept { return weights.size(); }
  bool uniform_capacity() const noexcept;
};

enum class InstanceErrorKind {
  syntax,
  empty,
  edge_count,
  tau,
  capacity,
  negative_length,
  negative_weight,
};

class InstanceError : public std::runtime_error {
 public:
  InstanceError(InstanceErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  InstanceErrorKind kind() const noexcept { return kind_; }

 private:
  InstanceErrorKind kind_;
};

/// Throws InstanceError describing the first violated invariant.
void validate(const PathNetwork& net);

/// Parses the JSON instance format: {"tau": x, "vertices": [{"w": ..}], "edges": [{"len": .., "cap": ..}]}.
PathNetwork parse_instance(std::string_view text);
std::string format_instance(const PathNetwork& net);

/**
 * @brief A location on the path: a vertex, or a point strictly inside an edge.
 *
 * Stored as (index, offset). offset == 0 denotes vertex `index`; offset > 0
 * denotes the point at that distance from vertex `index` along edge `index`.
 * Lexicographic order on (index, offset) is left-to-right order on the path,
 * even across zero-length edges.
 */
class Point {
 public:
  Point() = default;
  static Point vertex(std::size_t v) noexcept { return Point(v, 0.0); }

  bool is_vertex() const noexcept { return offset_ == 0.0; }
  std::size_t index() const noexcept { return index_; }
  double offset() const noexcept { return offset_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) noexcept {
    return a.index_ != b.index_ ? a.index_ < b.index_ : a.offset_ < b.offset_;
  }
  friend bool operator<=(const Point& a, const Point& b) noexcept { return !(b < a); }

 private:
  friend class PrefixIndex;
  Point(std::size_t index, double offset) noexcept : index_(index), offset_(offset) {}

  std::size_t index_ = 0;
  double offset_ = 0.0;
};

/**
 * @brief Immutable range-query index over a validated network.
 *
 * Weight and distance sums are prefix differences; minimum capacity over an
 * edge range is a sparse-table lookup. All queries are O(1).
 */
class PrefixIndex {
 public:
  explicit PrefixIndex(PathNetwork net);

  const PathNetwork& network() const noexcept { return net_; }
  std::size_t size() const noexcept { return net_.size(); }
  double tau() const noexcept { return net_.tau; }
  double weight(std::size_t v) const noexcept { return net_.weights[v]; }
  double edge_length(std::size_t e) const noexcept { return net_.edges[e].length; }
  double edge_capacity(std::size_t e) const noexcept { return net_.edges[e].capacity; }

  /// W[v_i, v_j]; throws std::out_of_range unless i <= j < n.
  double range_weight(std::size_t i, std::size_t j) const;
  /// Unchecked W[v_i, v_j]; an empty range (i == j + 1) gives 0.
  double weight_sum(std::size_t i, std::size_t j) const noexcept {
    return weight_prefix_[j + 1] - weight_prefix_[i];
  }

  /// Distance from vertex 0.
  double vertex_position(std::size_t v) const noexcept { return dist_prefix_[v]; }
  double position(Point p) const noexcept { return dist_prefix_[p.index()] + p.offset(); }

  /// Minimum capacity over edges first..last inclusive; +inf when first > last.
  double min_capacity(std::size_t first, std::size_t last) const noexcept;

  /// Point at `offset` along edge e, normalized to a vertex at either end.
  Point point_on_edge(std::size_t e, double offset) const;

  /// Prorated distance d(p, q); throws std::invalid_argument if q precedes p.
  double path_distance(Point p, Point q) const;
  /// c(p, q): minimum capacity of edges meeting the open segment (p, q), +inf if none.
  double path_capacity(Point p, Point q) const;

  /// Inclusive prefix sums: entry j is W[v_0, v_j].
  std::vector<double> weight_prefixes() const;
  /// Entry j is d(v_0, v_j).
  const std::vector<double>& distance_prefixes() const noexcept { return dist_prefix_; }

  void check_vertex(std::size_t v) const;
  void check_point(Point p) const;

 private:
  PathNetwork net_;
  std::vector<double> weight_prefix_;  // size n+1, weight_prefix_[0] == 0
  std::vector<double> dist_prefix_;    // size n
  std::vector<std::vector<double>> sparse_;  // sparse_[k][e] = min cap over edges [e, e + 2^k)
};

/// L-cost of v_h within [v_i, ..]: d(v_h, sink) tau + W[v_i, v_h] / c(v_h, sink).
double theta_L(const PrefixIndex& idx, std::size_t i, std::size_t h, Point sink);
/// R-cost of v_h within [.., v_j]: d(sink, v_h) tau + W[v_h, v_j] / c(sink, v_h).
double theta_R(const PrefixIndex& idx, std::size_t h, std::size_t j, Point sink);

/// Evacuation time of [v_i, v_j] to `sink` by direct O(n) evaluation.
double evacuation_time_ref(const PrefixIndex& idx, Point sink, std::size_t i, std::size_t j);

}  // namespace evac
