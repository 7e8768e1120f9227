#include <doctest.h>

#include <fstream>
#include <sstream>

#include "../support/fixtures.hpp"
#include "evac/model.hpp"

using namespace evac;
using evac::testing::f1;

namespace {

InstanceErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const InstanceError& e) {
    return e.kind();
  }
  FAIL("expected InstanceError");
  return InstanceErrorKind::syntax;
}

}  // namespace

TEST_CASE("parse_instance reads the committed fixture") {
  std::ifstream in(EVAC_TEST_DATA_DIR "/f1.json");
  std::stringstream ss;
  ss << in.rdbuf();
  const PathNetwork net = parse_instance(ss.str());
  CHECK(net.size() == 4);
  CHECK(net.tau == 1.0);
  CHECK(net.weights == std::vector<double>{3, 1, 2, 5});
  REQUIRE(net.edges.size() == 3);
  CHECK(net.edges[1].length == 1.0);
  CHECK(net.edges[1].capacity == 2.0);
  CHECK_FALSE(net.uniform_capacity());
}

TEST_CASE("format_instance round-trips") {
  const PathNetwork net = f1();
  const PathNetwork back = parse_instance(format_instance(net));
  CHECK(back.weights == net.weights);
  CHECK(back.tau == net.tau);
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    CHECK(back.edges[e].length == net.edges[e].length);
    CHECK(back.edges[e].capacity == net.edges[e].capacity);
  }
  const PathNetwork single = parse_instance(format_instance({2.5, {7}, {}}));
  CHECK(single.size() == 1);
  CHECK(single.edges.empty());
}

TEST_CASE("parse_instance diagnostics are distinct") {
  CHECK(parse_error_kind("{not json") == InstanceErrorKind::syntax);
  CHECK(parse_error_kind(R"({"tau":1,"vertices":[]})") == InstanceErrorKind::syntax);
  CHECK(parse_error_kind(R"({"tau":1,"vertices":[],"edges":[]})") == InstanceErrorKind::empty);
  CHECK(parse_error_kind(R"({"tau":1,"vertices":[{"w":1},{"w":1},{"w":1},{"w":1}],
      "edges":[{"len":1,"cap":1},{"len":1,"cap":1}]})") == InstanceErrorKind::edge_count);
  CHECK(parse_error_kind(R"({"tau":1,"vertices":[{"w":1},{"w":1}],"edges":[{"len":1,"cap":0}]})") ==
        InstanceErrorKind::capacity);
  CHECK(parse_error_kind(R"({"tau":0,"vertices":[{"w":1}],"edges":[]})") == InstanceErrorKind::tau);
  CHECK(parse_error_kind(R"({"tau":1,"vertices":[{"w":-1}],"edges":[]})") ==
        InstanceErrorKind::negative_weight);
  CHECK(parse_error_kind(R"({"tau":1,"vertices":[{"w":1},{"w":1}],"edges":[{"len":-2,"cap":1}]})") ==
        InstanceErrorKind::negative_length);
  CHECK(parse_error_kind(R"({"tau":1,"vertices":[{"x":1}],"edges":[]})") == InstanceErrorKind::syntax);
}

TEST_CASE("prefix index sums and capacities") {
  const PrefixIndex idx(f1());
  CHECK(idx.weight_prefixes() == std::vector<double>{3, 4, 6, 11});
  CHECK(idx.distance_prefixes() == std::vector<double>{0, 2, 3, 6});
  CHECK(idx.range_weight(0, 3) == 11);
  CHECK(idx.range_weight(1, 2) == 3);
  CHECK(idx.range_weight(2, 2) == 2);
  CHECK_THROWS_AS(idx.range_weight(2, 1), std::out_of_range);
  CHECK_THROWS_AS(idx.range_weight(0, 4), std::out_of_range);

  CHECK(idx.path_distance(Point::vertex(0), Point::vertex(3)) == 6);
  CHECK(idx.path_distance(Point::vertex(2), idx.point_on_edge(2, 1)) == 1);
  CHECK(idx.path_distance(Point::vertex(1), Point::vertex(1)) == 0);
  CHECK_THROWS_AS(idx.path_distance(Point::vertex(2), Point::vertex(1)), std::invalid_argument);

  CHECK(idx.path_capacity(Point::vertex(0), Point::vertex(3)) == 1);
  CHECK(idx.path_capacity(Point::vertex(1), Point::vertex(2)) == 2);
  CHECK(idx.path_capacity(Point::vertex(1), Point::vertex(1)) == kInfinity);
  CHECK(idx.path_capacity(Point::vertex(1), idx.point_on_edge(2, 0.5)) == 1);
  CHECK_THROWS_AS(idx.path_capacity(Point::vertex(3), Point::vertex(1)), std::invalid_argument);
  CHECK(idx.min_capacity(2, 1) == kInfinity);

  const PrefixIndex one({1.0, {4}, {}});
  CHECK(one.weight_prefixes() == std::vector<double>{4});
  CHECK(one.min_capacity(1, 0) == kInfinity);
}

TEST_CASE("points normalize and order along the path") {
  const PrefixIndex idx(f1());
  CHECK(idx.point_on_edge(0, 0) == Point::vertex(0));
  CHECK(idx.point_on_edge(0, 2) == Point::vertex(1));
  const Point mid = idx.point_on_edge(0, 1);
  CHECK_FALSE(mid.is_vertex());
  CHECK(Point::vertex(0) < mid);
  CHECK(mid < Point::vertex(1));
  CHECK_THROWS_AS(idx.point_on_edge(0, 2.5), std::out_of_range);
  CHECK_THROWS_AS(idx.point_on_edge(3, 0.5), std::out_of_range);

  // Zero-length edges keep path order lexicographic.
  const PrefixIndex flat({1.0, {1, 1, 1}, {{0, 1}, {1, 1}}});
  CHECK(flat.point_on_edge(0, 0) == Point::vertex(0));
  CHECK(Point::vertex(0) < Point::vertex(1));
  CHECK(flat.position(Point::vertex(1)) == flat.position(Point::vertex(0)));
}

TEST_CASE("direct L and R costs") {
  const PrefixIndex idx(f1());
  CHECK(theta_L(idx, 0, 0, Point::vertex(1)) == doctest::Approx(5));
  CHECK(theta_L(idx, 0, 0, idx.point_on_edge(2, 1)) == doctest::Approx(7));
  CHECK(theta_L(idx, 2, 2, Point::vertex(2)) == 0);
  CHECK(theta_R(idx, 3, 3, Point::vertex(1)) == doctest::Approx(9));
  CHECK(theta_R(idx, 2, 3, Point::vertex(1)) == doctest::Approx(4.5));
  CHECK(theta_R(idx, 3, 3, Point::vertex(3)) == 0);
  CHECK_THROWS_AS(theta_L(idx, 0, 2, Point::vertex(1)), std::invalid_argument);
  CHECK_THROWS_AS(theta_R(idx, 0, 2, Point::vertex(1)), std::invalid_argument);
}

TEST_CASE("reference evacuation time") {
  const PrefixIndex idx(f1());
  CHECK(evacuation_time_ref(idx, idx.point_on_edge(2, 1), 0, 3) == doctest::Approx(7));
  CHECK(evacuation_time_ref(idx, Point::vertex(1), 0, 3) == doctest::Approx(9));
  CHECK(evacuation_time_ref(idx, Point::vertex(2), 2, 2) == 0);
  CHECK_THROWS_AS(evacuation_time_ref(idx, Point::vertex(0), 1, 3), std::invalid_argument);
}

TEST_CASE("within applies the shared tolerance") {
  CHECK(within(1.0, 1.0));
  CHECK(within(1.0 + 1e-12, 1.0));
  CHECK_FALSE(within(1.0 + 1e-6, 1.0));
  CHECK(within(0.0, 0.0));
  CHECK(within(kInfinity, kInfinity));
  CHECK_FALSE(within(kInfinity, 1e300));
}

TEST_CASE("property: range queries match naive loops") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PathNetwork net = evac::testing::random_network(seed, 40);
    const PrefixIndex idx(net);
    const std::size_t n = net.size();
    for (std::size_t i = 0; i < n; ++i) {
      double w = 0;
      double cap = kInfinity;
      for (std::size_t j = i; j < n; ++j) {
        w += net.weights[j];
        CHECK(evac::testing::close(idx.range_weight(i, j), w));
        if (j > i) CHECK(idx.min_capacity(i, j - 1) == cap);
        if (j + 1 < n) cap = std::min(cap, net.edges[j].capacity);
      }
    }
  }
}
