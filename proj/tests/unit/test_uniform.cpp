#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "evac/cctree.hpp"
#include "evac/op_counters.hpp"
#include "evac/oracle.hpp"
#include "evac/uniform.hpp"

using namespace evac;
using evac::testing::close;
using evac::testing::f2;

TEST_CASE("summaries and merges on F2") {
  auto idx = std::make_shared<const PrefixIndex>(f2());
  const UniformTree tree(idx);
  CHECK(tree.capacity() == 1);
  CHECK(tree.build_merges() == 3);

  const UniformSummary a = tree.fold(0, 1);
  CHECK(a.l_vertex == 0);
  CHECK(a.l_cost == doctest::Approx(5));
  const UniformSummary b = tree.fold(2, 3);
  CHECK(b.l_vertex == 3);
  CHECK(b.l_cost == doctest::Approx(7));

  const UniformSummary ab = merge_summaries(a, b, *idx);
  CHECK(ab.l_vertex == 3);
  CHECK(ab.l_cost == doctest::Approx(11));
  CHECK(ab.r_cost == doctest::Approx(11));
  CHECK(ab.r_vertex == 0);  // tie between v1 and v4
  CHECK(ab.weight == 11);
  CHECK(ab.length == 6);
  CHECK_THROWS_AS(merge_summaries(b, a, *idx), std::invalid_argument);

  const auto c = tree.theta_L(0, 1);
  CHECK(c.vertex == 0);
  CHECK(c.cost == doctest::Approx(5));
}

TEST_CASE("uniform tree rejects mixed capacities") {
  CHECK_THROWS_AS(UniformTree(std::make_shared<const PrefixIndex>(evac::testing::f1())),
                  std::invalid_argument);
  const UniformTree one(std::make_shared<const PrefixIndex>(PathNetwork{1.0, {2}, {}}));
  CHECK(one.theta_L(0, 0).cost == 0);
  CHECK(one.theta_R(0, 0, Point::vertex(0)).cost == 0);
}

TEST_CASE("property: uniform tree agrees with the oracle and the general tree") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const PathNetwork net = evac::testing::random_network(seed, 40, true);
    auto idx = std::make_shared<const PrefixIndex>(net);
    const UniformTree uni(idx);
    const CCTree gen(idx);
    std::mt19937_64 rng(seed + 1);
    const std::size_t n = net.size();
    CHECK(uni.build_merges() == n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const double want_l = oracle_theta_L(*idx, i, j);
        CHECK(close(uni.theta_L(i, j).cost, want_l));
        CHECK(close(gen.theta_L(i, j).cost, want_l));
        const Point s = evac::testing::random_point(*idx, 0, i, rng);
        const double want_r = oracle_theta_R(*idx, i, j, s);
        const auto r = uni.theta_R(i, j, s);
        CHECK(close(r.cost, want_r));
        CHECK(close(theta_R(*idx, r.vertex, j, s), r.cost));
        CHECK(close(gen.theta_R(i, j, s).cost, want_r));
      }
    }
  }
}

TEST_CASE("fold counts one candidate per canonical node") {
  const UniformTree tree(std::make_shared<const PrefixIndex>(
      evac::generate_instance({.n = 64, .seed = 3, .uniform = true})));
  op_counters().reset();
  tree.fold(0, 63);
  CHECK(op_counters().candidate_evals == 1);
  op_counters().reset();
  tree.fold(1, 62);
  CHECK(op_counters().candidate_evals == tree.topology().canonical_nodes(1, 62).size());
}
