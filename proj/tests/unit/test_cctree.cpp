#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "evac/cctree.hpp"
#include "evac/op_counters.hpp"
#include "evac/oracle.hpp"

using namespace evac;
using evac::testing::close;
using evac::testing::f1;

namespace {

NodeId node_over(const TreeTopology& topo, std::size_t lo, std::size_t hi) {
  for (NodeId id = 0; id < topo.node_count(); ++id) {
    if (topo.node(id).lo == lo && topo.node(id).hi == hi) return id;
  }
  FAIL("no such node");
  return kNoNode;
}

}  // namespace

TEST_CASE("node-local critical candidates on F1") {
  const CCTree tree(std::make_shared<const PrefixIndex>(f1()));
  const TreeTopology& topo = tree.topology();
  const NodeId left = node_over(topo, 0, 1), right = node_over(topo, 2, 3);

  auto c = tree.cost_L_node(right, 4, kInfinity);
  CHECK(c.vertex == 2);
  CHECK(c.cost == doctest::Approx(9));
  c = tree.cost_L_node(left, 0, 1);
  CHECK(c.vertex == 0);
  CHECK(c.cost == doctest::Approx(5));
  c = tree.cost_R_node(right, 0, 2);
  CHECK(c.vertex == 3);
  CHECK(c.cost == doctest::Approx(8));
  c = tree.cost_R_node(left, 7, kInfinity);
  CHECK(c.vertex == 1);
  CHECK(c.cost == doctest::Approx(10));

  // Node storage: suffix capacities nondecreasing, prefix capacities nonincreasing.
  CHECK(tree.suffix_capacities(left).size() == 1);
  CHECK(tree.suffix_capacities(left)[0] == 1);
  CHECK(tree.prefix_capacities(right)[0] == 1);
  CHECK(tree.left_weight_table(left).size() >= 1);
}

TEST_CASE("Theta queries on F1") {
  const CCTree tree(std::make_shared<const PrefixIndex>(f1()));
  auto c = tree.theta_L(0, 2);
  CHECK(c.vertex == 0);
  CHECK(c.cost == doctest::Approx(6));
  c = tree.theta_L(0, 3);
  CHECK(c.vertex == 0);
  CHECK(c.cost == doctest::Approx(9));
  c = tree.theta_L(2, 2);
  CHECK(c.vertex == 2);
  CHECK(c.cost == doctest::Approx(2));
  c = tree.theta_R(2, 3, Point::vertex(1));
  CHECK(c.vertex == 3);
  CHECK(c.cost == doctest::Approx(9));
  c = tree.theta_R(2, 2, Point::vertex(1));
  CHECK(c.vertex == 2);
  CHECK(c.cost == doctest::Approx(2));

  CHECK(tree.l_test(0, 2, 6));
  CHECK_FALSE(tree.l_test(0, 2, 5.9));
  CHECK_THROWS_AS(tree.theta_L(3, 2), std::out_of_range);
  CHECK_THROWS_AS(tree.theta_L(0, 4), std::out_of_range);
  CHECK_THROWS_AS(tree.theta_R(1, 3, Point::vertex(2)), std::invalid_argument);
}

TEST_CASE("single-vertex network") {
  const CCTree tree(std::make_shared<const PrefixIndex>(PathNetwork{1.0, {5}, {}}));
  CHECK(tree.theta_L(0, 0).cost == 0);
  CHECK(tree.theta_R(0, 0, Point::vertex(0)).cost == 0);
}

TEST_CASE("property: Theta queries match direct maximization") {
  op_counters().reset();
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const PathNetwork net = evac::testing::random_network(seed, 40);
    auto idx = std::make_shared<const PrefixIndex>(net);
    const CCTree tree(idx);
    std::mt19937_64 rng(seed);
    const std::size_t n = net.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const auto l = tree.theta_L(i, j);
        CHECK(close(l.cost, oracle_theta_L(*idx, i, j)));
        CHECK(l.vertex >= i);
        CHECK(l.vertex <= j);
        const Point s = evac::testing::random_point(*idx, 0, i, rng);
        const auto r = tree.theta_R(i, j, s);
        CHECK(close(r.cost, oracle_theta_R(*idx, i, j, s)));
        // The reported critical vertex attains the maximum.
        CHECK(close(theta_R(*idx, r.vertex, j, s), r.cost));
      }
    }
  }
  CHECK(op_counters().exclusivity_violations == 0);
}
