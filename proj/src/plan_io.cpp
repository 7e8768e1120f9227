#include "evac/plan_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace evac {

namespace {

double round_12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

std::size_t one_based(const nlohmann::json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 1) {
    throw PlanError(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::size_t>(value.get<long long>() - 1);
}

std::string range_text(std::size_t l, std::size_t r) {
  return "[" + std::to_string(l + 1) + ", " + std::to_string(r + 1) + "]";
}

}  // namespace

PlanDocument to_document(const SolvePlan& plan) {
  PlanDocument doc;
  doc.k = plan.k;
  doc.time = plan.time;
  for (const Segment& seg : plan.segments) {
    doc.sinks.push_back({seg.sink.index(), seg.sink.offset()});
    doc.partition.emplace_back(seg.first, seg.last);
  }
  return doc;
}

std::string format_plan(const PlanDocument& doc) {
  nlohmann::ordered_json out;
  out["k"] = doc.k;
  out["time"] = round_12(doc.time);
  auto sinks = nlohmann::ordered_json::array();
  for (const SinkSpec& s : doc.sinks) {
    nlohmann::ordered_json item;
    if (s.offset == 0.0) {
      item["vertex"] = s.index + 1;
    } else {
      item["edge"] = s.index + 1;
      item["offset"] = s.offset;
    }
    sinks.push_back(std::move(item));
  }
  out["sinks"] = std::move(sinks);
  auto partition = nlohmann::ordered_json::array();
  for (auto [l, r] : doc.partition) partition.push_back({l + 1, r + 1});
  out["partition"] = std::move(partition);
  return out.dump(2) + "\n";
}

PlanDocument parse_plan(std::string_view text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw PlanError(std::string("malformed plan: ") + e.what());
  }
  if (!in.is_object()) throw PlanError("plan must be a JSON object");
  for (const char* key : {"k", "time", "sinks", "partition"}) {
    if (!in.contains(key)) throw PlanError(std::string("plan: missing field \"") + key + "\"");
  }
  if (!in["time"].is_number()) throw PlanError("plan: time must be a number");
  if (!in["sinks"].is_array() || !in["partition"].is_array()) {
    throw PlanError("plan: sinks and partition must be arrays");
  }

  PlanDocument doc;
  doc.k = one_based(in["k"], "k") + 1;
  doc.time = in["time"].get<double>();
  for (const auto& s : in["sinks"]) {
    if (!s.is_object()) throw PlanError("plan: each sink must be an object");
    if (s.contains("vertex")) {
      doc.sinks.push_back({one_based(s["vertex"], "sink vertex"), 0.0});
    } else if (s.contains("edge") && s.contains("offset") && s["offset"].is_number()) {
      doc.sinks.push_back({one_based(s["edge"], "sink edge"), s["offset"].get<double>()});
    } else {
      throw PlanError("plan: sink needs \"vertex\" or \"edge\" and \"offset\"");
    }
  }
  for (const auto& p : in["partition"]) {
    if (!p.is_array() || p.size() != 2) throw PlanError("plan: partition entries are [l, r] pairs");
    doc.partition.emplace_back(one_based(p[0], "partition bound"), one_based(p[1], "partition bound"));
  }
  return doc;
}

VerifyReport verify_plan(const PrefixIndex& idx, const PlanDocument& doc) {
  const std::size_t n = idx.size();
  VerifyReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.message = std::move(msg);
    return report;
  };

  if (doc.partition.empty()) return fail("partition is empty");
  if (doc.partition.size() > doc.k) {
    return fail("partition has " + std::to_string(doc.partition.size()) + " segments but k = " +
                std::to_string(doc.k));
  }
  if (doc.sinks.size() != doc.partition.size()) {
    return fail("plan lists " + std::to_string(doc.sinks.size()) + " sinks for " +
                std::to_string(doc.partition.size()) + " segments");
  }
  std::size_t next = 0;
  for (auto [l, r] : doc.partition) {
    if (l > r) return fail("segment " + range_text(l, r) + " is reversed");
    if (l != next) {
      return fail("segment " + range_text(l, r) + " does not start at vertex " +
                  std::to_string(next + 1));
    }
    if (r >= n) return fail("segment " + range_text(l, r) + " runs past vertex " + std::to_string(n));
    next = r + 1;
  }
  if (next != n) {
    return fail("vertices " + std::to_string(next + 1) + ".." + std::to_string(n) + " are not covered");
  }

  for (std::size_t s = 0; s < doc.partition.size(); ++s) {
    const auto [l, r] = doc.partition[s];
    const SinkSpec& spec = doc.sinks[s];
    Point sink;
    try {
      sink = spec.offset == 0.0 ? (idx.check_vertex(spec.index), Point::vertex(spec.index))
                                : idx.point_on_edge(spec.index, spec.offset);
    } catch (const std::exception&) {
      return fail("segment " + range_text(l, r) + " has a sink off the network");
    }
    if (sink < Point::vertex(l) || Point::vertex(r) < sink) {
      return fail("segment " + range_text(l, r) + " has its sink outside the segment");
    }
    const double t = evacuation_time_ref(idx, sink, l, r);
    report.max_time = std::max(report.max_time, t);
    if (!(t <= doc.time * (1.0 + 1e-9))) {
      char buf[160];
      std::snprintf(buf, sizeof buf, " needs time %.12g, more than the plan's %.12g", t, doc.time);
      return fail("segment " + range_text(l, r) + buf);
    }
  }
  report.ok = true;
  return report;
}

}  // namespace evac
