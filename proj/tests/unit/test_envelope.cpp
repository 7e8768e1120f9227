#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/fixtures.hpp"
#include "evac/envelope.hpp"

using namespace evac;

namespace {

double scan_max(const std::vector<Line>& lines, double x) {
  double best = -kInfinity;
  for (const Line& l : lines) best = std::max(best, l.at(x));
  return best;
}

std::vector<Line> random_family(std::mt19937_64& rng, SlopeOrder order) {
  const std::size_t m = 1 + rng() % 64;
  std::uniform_real_distribution<double> slope(-20.0, 20.0), icpt(-100.0, 100.0);
  std::vector<Line> lines(m);
  for (std::size_t i = 0; i < m; ++i) {
    // Integer slopes now and then so that equal slopes occur.
    lines[i].slope = rng() % 4 == 0 ? static_cast<double>(rng() % 5) : slope(rng);
    lines[i].intercept = icpt(rng);
    lines[i].tag = static_cast<std::uint32_t>(i);
  }
  std::vector<double> slopes;
  for (const Line& l : lines) slopes.push_back(l.slope);
  std::sort(slopes.begin(), slopes.end());
  if (order == SlopeOrder::nonincreasing) std::reverse(slopes.begin(), slopes.end());
  for (std::size_t i = 0; i < m; ++i) lines[i].slope = slopes[i];
  return lines;
}

}  // namespace

TEST_CASE("two lines cross once") {
  const std::vector<Line> lines{{0, 2, 0}, {1, 0, 1}};
  const Envelope env(lines, SlopeOrder::nondecreasing);
  REQUIRE(env.breakpoints().size() == 1);
  CHECK(env.breakpoints()[0] == doctest::Approx(2));
  CHECK(env.query(1).tag == 0);
  CHECK(env.query(1).value == doctest::Approx(2));
  CHECK(env.query(3).tag == 1);
  CHECK(env.query(3).value == doctest::Approx(3));
  CHECK(env.query(2).tag == 0);  // tie at the breakpoint
}

TEST_CASE("a line dominated everywhere is removed") {
  const std::vector<Line> lines{{2, 0, 0}, {1, 0.5, 1}, {0, 2, 2}};
  const Envelope env(lines, SlopeOrder::nonincreasing);
  CHECK(env.size() == 2);
  for (const Line& l : env.lines()) CHECK(l.tag != 1);
}

TEST_CASE("single line and degenerate inputs") {
  const std::vector<Line> one{{-3, 4, 7}};
  const Envelope env(one, SlopeOrder::nondecreasing);
  CHECK(env.size() == 1);
  CHECK(env.breakpoints().empty());
  CHECK(env.query(10).tag == 7);
  CHECK(env.query(10).value == doctest::Approx(-26));

  // Equal slopes keep the larger intercept, then the smaller tag.
  const std::vector<Line> same{{1, 1, 4}, {1, 3, 5}, {1, 3, 2}};
  const Envelope dup(same, SlopeOrder::nondecreasing);
  CHECK(dup.size() == 1);
  CHECK(dup.query(0).tag == 2);

  // Lines that only win at negative x are dropped.
  const std::vector<Line> neg{{-1, 0, 0}, {0, 5, 1}};
  CHECK(Envelope(neg, SlopeOrder::nondecreasing).size() == 1);

  CHECK_THROWS_AS(Envelope(std::vector<Line>{}, SlopeOrder::nondecreasing), std::invalid_argument);
  const std::vector<Line> unsorted{{1, 0, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(Envelope(unsorted, SlopeOrder::nondecreasing), std::invalid_argument);
}

TEST_CASE("append_upper_envelope counts work and appends") {
  const std::vector<Line> lines{{0, 2, 0}, {1, 0, 1}};
  std::vector<Line> out;
  std::vector<double> breaks;
  std::uint64_t work = 0;
  CHECK(append_upper_envelope(lines, SlopeOrder::nondecreasing, out, breaks, &work) == 2);
  CHECK(append_upper_envelope(lines, SlopeOrder::nondecreasing, out, breaks, &work) == 2);
  CHECK(out.size() == 4);
  CHECK(breaks.size() == 4);
  CHECK(work >= 4);
  CHECK(work <= 8);
}

TEST_CASE("property: envelope matches a linear scan") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> xs(0.0, 50.0);
  for (int fam = 0; fam < 300; ++fam) {
    const SlopeOrder order = fam % 2 ? SlopeOrder::nonincreasing : SlopeOrder::nondecreasing;
    const std::vector<Line> lines = random_family(rng, order);
    const Envelope env(lines, order);
    // Breakpoints are sorted and slopes increase along the envelope.
    const auto br = env.breakpoints();
    CHECK(std::is_sorted(br.begin(), br.end()));
    for (std::size_t i = 1; i < env.size(); ++i) CHECK(env.lines()[i - 1].slope < env.lines()[i].slope);
    for (int q = 0; q < 50; ++q) {
      const double x = q == 0 ? 0.0 : xs(rng);
      const EnvelopeHit hit = env.query(x);
      const double want = scan_max(lines, x);
      CHECK(evac::testing::close(hit.value, want));
      CHECK(evac::testing::close(lines[hit.tag].at(x), want));
    }
  }
}
