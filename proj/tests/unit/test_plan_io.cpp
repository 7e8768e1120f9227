#include <doctest.h>

#include "../support/fixtures.hpp"
#include "evac/plan_io.hpp"

using namespace evac;
using evac::testing::f1;

TEST_CASE("plan round trip and verification on F1") {
  const SolvePlan plan = solve_ksink(f1(), 2);
  const PlanDocument doc = to_document(plan);
  const std::string text = format_plan(doc);
  const PlanDocument back = parse_plan(text);
  CHECK(back.k == 2);
  CHECK(back.time == doctest::Approx(4));
  CHECK(back.sinks == doc.sinks);
  CHECK(back.partition == doc.partition);
  CHECK(format_plan(back) == text);

  const PrefixIndex idx(f1());
  const VerifyReport ok = verify_plan(idx, back);
  CHECK(ok.ok);
  CHECK(ok.max_time == doctest::Approx(4));

  // Moving the first sink one unit right breaks the time bound.
  PlanDocument moved = back;
  moved.sinks[0].offset += 1.0;
  CHECK_FALSE(verify_plan(idx, moved).ok);

  PlanDocument missing = back;
  missing.partition.back().second = 2;
  missing.partition.pop_back();
  missing.sinks.pop_back();
  missing.partition.push_back({3, 3});
  missing.partition.pop_back();
  const VerifyReport r = verify_plan(idx, missing);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("not covered") != std::string::npos);

  PlanDocument overlap = back;
  overlap.partition[1].first = 2;
  CHECK_FALSE(verify_plan(idx, overlap).ok);

  PlanDocument too_many = back;
  too_many.k = 1;
  CHECK_FALSE(verify_plan(idx, too_many).ok);

  PlanDocument outside = back;
  outside.sinks[1] = {0, 0.0};
  CHECK(verify_plan(idx, outside).message.find("outside") != std::string::npos);
}

TEST_CASE("plan text format") {
  PlanDocument doc;
  doc.k = 2;
  doc.time = 1.0 / 3.0;
  doc.sinks = {{0, 1.5}, {3, 0.0}};
  doc.partition = {{0, 2}, {3, 3}};
  const std::string text = format_plan(doc);
  CHECK(text.find("\"edge\": 1") != std::string::npos);
  CHECK(text.find("\"vertex\": 4") != std::string::npos);
  CHECK(text.find("0.333333333333") != std::string::npos);
  CHECK(text.find("0.3333333333333") == std::string::npos);

  CHECK_THROWS_AS(parse_plan("{"), PlanError);
  CHECK_THROWS_AS(parse_plan(R"({"k":1,"time":1,"sinks":[]})"), PlanError);
  CHECK_THROWS_AS(parse_plan(R"({"k":0,"time":1,"sinks":[],"partition":[]})"), PlanError);
  CHECK_THROWS_AS(parse_plan(R"({"k":1,"time":1,"sinks":[{"edge":1}],"partition":[]})"), PlanError);
  CHECK_THROWS_AS(parse_plan(R"({"k":1,"time":1,"sinks":[],"partition":[[1]]})"), PlanError);
}
