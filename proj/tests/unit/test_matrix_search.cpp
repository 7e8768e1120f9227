#include <doctest.h>

#include <algorithm>

#include "../support/fixtures.hpp"
#include "evac/matrix_search.hpp"
#include "evac/oracle.hpp"

using namespace evac;
using evac::testing::close;

TEST_CASE("matrix entries on F1") {
  const SinkEngine engine(evac::testing::f1());
  const OptMatrixView a(engine);
  // 1-based A[i, j] = OPT(n - i + 1, j) maps to row i - 1, column j - 1 here.
  CHECK(a.entry(3, 2) == doctest::Approx(4));
  CHECK(a.entry(0, 1) == 0);
  CHECK(a.entry(1, 2) == 0);
  CHECK(a.entry(3, 3) == doctest::Approx(7));
  CHECK(a.evaluations() == 2);
  a.entry(3, 3);
  CHECK(a.evaluations() == 2);
  CHECK_THROWS_AS(a.entry(4, 0), std::out_of_range);
}

TEST_CASE("search rejects k outside [1, n]") {
  const SinkEngine engine(evac::testing::f1());
  CHECK_THROWS_AS(sorted_matrix_search(engine, 0), std::invalid_argument);
  CHECK_THROWS_AS(sorted_matrix_search(engine, 5), std::invalid_argument);
  CHECK_THROWS_AS(bisect_search(engine, 0), std::invalid_argument);
  CHECK(sorted_matrix_search(engine, 4) == 0);
}

TEST_CASE("property: sorted matrix is monotone and both searches find the DP optimum") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const PathNetwork net = evac::testing::random_network(seed, 24, seed % 2 == 0);
    const SinkEngine engine(net);
    const OptMatrixView a(engine);
    const std::size_t n = net.size();
    std::vector<double> entries;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        entries.push_back(a.entry(r, c));
        if (r > 0) CHECK(a.entry(r - 1, c) <= a.entry(r, c));
        if (c > 0) CHECK(a.entry(r, c - 1) <= a.entry(r, c));
      }
    }
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 4); ++k) {
      SearchStats stats;
      const double t = sorted_matrix_search(engine, k, &stats);
      CHECK(close(t, oracle_ksink_dp(engine.index(), k).value));
      CHECK(close(bisect_search(engine, k), t));
      CHECK(std::find(entries.begin(), entries.end(), t) != entries.end());
      CHECK(stats.feasibility_tests >= 1);
    }
  }
}
