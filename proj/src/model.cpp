#include "evac/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace evac {

bool PathNetwork::uniform_capacity() const noexcept {
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return e.capacity == edges.front().capacity;
  });
}

void validate(const PathNetwork& net) {
  if (net.weights.empty()) {
    throw InstanceError(InstanceErrorKind::empty, "instance has no vertices");
  }
  if (net.edges.size() + 1 != net.weights.size()) {
    throw InstanceError(InstanceErrorKind::edge_count,
                        "expected " + std::to_string(net.weights.size() - 1) + " edges for " +
                            std::to_string(net.weights.size()) + " vertices, got " +
                            std::to_string(net.edges.size()));
  }
  if (!(net.tau > 0.0) || !std::isfinite(net.tau)) {
    throw InstanceError(InstanceErrorKind::tau, "tau must be a positive finite number");
  }
  for (std::size_t v = 0; v < net.weights.size(); ++v) {
    if (!(net.weights[v] >= 0.0) || !std::isfinite(net.weights[v])) {
      throw InstanceError(InstanceErrorKind::negative_weight,
                          "vertex " + std::to_string(v + 1) + " has a negative or non-finite weight");
    }
  }
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const Edge& edge = net.edges[e];
    if (!(edge.capacity > 0.0) || !std::isfinite(edge.capacity)) {
      throw InstanceError(InstanceErrorKind::capacity,
                          "edge " + std::to_string(e + 1) + " has a non-positive capacity");
    }
    if (!(edge.length >= 0.0) || !std::isfinite(edge.length)) {
      throw InstanceError(InstanceErrorKind::negative_length,
                          "edge " + std::to_string(e + 1) + " has a negative length");
    }
  }
}

namespace {

double number_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number()) {
    throw InstanceError(InstanceErrorKind::syntax,
                        where + ": missing numeric field \"" + key + "\"");
  }
  return obj.at(key).get<double>();
}

}  // namespace

PathNetwork parse_instance(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InstanceError(InstanceErrorKind::syntax, std::string("malformed instance: ") + e.what());
  }
  if (!doc.is_object()) {
    throw InstanceError(InstanceErrorKind::syntax, "instance must be a JSON object");
  }
  for (const char* key : {"vertices", "edges"}) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
      throw InstanceError(InstanceErrorKind::syntax,
                          std::string("instance: missing array field \"") + key + "\"");
    }
  }

  PathNetwork net;
  net.tau = number_field(doc, "tau", "instance");
  const auto& vertices = doc.at("vertices");
  net.weights.reserve(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    net.weights.push_back(number_field(vertices[v], "w", "vertex " + std::to_string(v + 1)));
  }
  const auto& edges = doc.at("edges");
  net.edges.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "edge " + std::to_string(e + 1);
    net.edges.push_back({number_field(edges[e], "len", where), number_field(edges[e], "cap", where)});
  }
  validate(net);
  return net;
}

std::string format_instance(const PathNetwork& net) {
  // One vertex / edge per line keeps large generated instances diffable.
  std::ostringstream out;
  out.precision(17);
  out << "{\n  \"tau\": " << net.tau << ",\n  \"vertices\": [";
  for (std::size_t v = 0; v < net.weights.size(); ++v) {
    out << (v ? ",\n    " : "\n    ") << "{\"w\": " << net.weights[v] << '}';
  }
  out << "\n  ],\n  \"edges\": [";
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    out << (e ? ",\n    " : "\n    ") << "{\"len\": " << net.edges[e].length
        << ", \"cap\": " << net.edges[e].capacity << '}';
  }
  out << (net.edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

PrefixIndex::PrefixIndex(PathNetwork net) : net_(std::move(net)) {
  validate(net_);
  const std::size_t n = net_.size();

  weight_prefix_.assign(n + 1, 0.0);
  for (std::size_t v = 0; v < n; ++v) weight_prefix_[v + 1] = weight_prefix_[v] + net_.weights[v];

  dist_prefix_.assign(n, 0.0);
  for (std::size_t e = 0; e + 1 < n; ++e) dist_prefix_[e + 1] = dist_prefix_[e] + net_.edges[e].length;

  const std::size_t m = net_.edges.size();
  if (m == 0) return;
  sparse_.emplace_back(m);
  for (std::size_t e = 0; e < m; ++e) sparse_[0][e] = net_.edges[e].capacity;
  for (std::size_t k = 1; (std::size_t{1} << k) <= m; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    const std::size_t width = std::size_t{1} << k;
    std::vector<double> level(m - width + 1);
    for (std::size_t e = 0; e + width <= m; ++e) {
      level[e] = std::min(sparse_[k - 1][e], sparse_[k - 1][e + half]);
    }
    sparse_.push_back(std::move(level));
  }
}

void PrefixIndex::check_vertex(std::size_t v) const {
  if (v >= size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(size()));
  }
}

void PrefixIndex::check_point(Point p) const {
  check_vertex(p.index());
  if (p.is_vertex()) return;
  if (p.index() + 1 >= size() || !(p.offset() < edge_length(p.index()))) {
    throw std::out_of_range("edge point outside its edge");
  }
}

double PrefixIndex::range_weight(std::size_t i, std::size_t j) const {
  check_vertex(j);
  if (i > j) throw std::out_of_range("range_weight requires i <= j");
  return weight_sum(i, j);
}

double PrefixIndex::min_capacity(std::size_t first, std::size_t last) const noexcept {
  if (first > last) return kInfinity;
  const std::size_t len = last - first + 1;
  const int k = std::bit_width(len) - 1;
  return std::min(sparse_[k][first], sparse_[k][last + 1 - (std::size_t{1} << k)]);
}

Point PrefixIndex::point_on_edge(std::size_t e, double offset) const {
  if (e + 1 >= size()) throw std::out_of_range("edge " + std::to_string(e) + " out of range");
  const double len = edge_length(e);
  if (!(offset >= 0.0) || offset > len) {
    throw std::out_of_range("offset outside edge " + std::to_string(e));
  }
  if (offset == 0.0) return Point::vertex(e);
  if (offset == len) return Point::vertex(e + 1);
  return Point(e, offset);
}

double PrefixIndex::path_distance(Point p, Point q) const {
  if (q < p) throw std::invalid_argument("path_distance: q precedes p");
  return position(q) - position(p);
}

double PrefixIndex::path_capacity(Point p, Point q) const {
  if (q < p) throw std::invalid_argument("path_capacity: q precedes p");
  if (p == q) return kInfinity;
  // p's own edge always meets (p, q); q's edge only when q is strictly inside it.
  const std::size_t first = p.index();
  if (q.is_vertex() && q.index() == 0) return kInfinity;
  const std::size_t last = q.is_vertex() ? q.index() - 1 : q.index();
  return min_capacity(first, last);
}

std::vector<double> PrefixIndex::weight_prefixes() const {
  return {weight_prefix_.begin() + 1, weight_prefix_.end()};
}

double theta_L(const PrefixIndex& idx, std::size_t i, std::size_t h, Point sink) {
  idx.check_vertex(h);
  if (i > h) throw std::invalid_argument("theta_L requires i <= h");
  const Point vh = Point::vertex(h);
  if (sink < vh) throw std::invalid_argument("theta_L requires v_h <= sink");
  return idx.path_distance(vh, sink) * idx.tau() + idx.weight_sum(i, h) / idx.path_capacity(vh, sink);
}

double theta_R(const PrefixIndex& idx, std::size_t h, std::size_t j, Point sink) {
  idx.check_vertex(j);
  if (h > j) throw std::invalid_argument("theta_R requires h <= j");
  const Point vh = Point::vertex(h);
  if (vh < sink) throw std::invalid_argument("theta_R requires sink <= v_h");
  return idx.path_distance(sink, vh) * idx.tau() + idx.weight_sum(h, j) / idx.path_capacity(sink, vh);
}

double evacuation_time_ref(const PrefixIndex& idx, Point sink, std::size_t i, std::size_t j) {
  idx.check_vertex(j);
  idx.check_point(sink);
  if (i > j || sink < Point::vertex(i) || Point::vertex(j) < sink) {
    throw std::invalid_argument("evacuation_time_ref: sink outside [v_i, v_j]");
  }
  double worst = 0.0;
  for (std::size_t h = i; h <= j; ++h) {
    const Point vh = Point::vertex(h);
    if (vh <= sink) worst = std::max(worst, theta_L(idx, i, h, sink));
    if (sink <= vh) worst = std::max(worst, theta_R(idx, h, j, sink));
  }
  return worst;
}

}  // namespace evac
