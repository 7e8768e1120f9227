/**
 * @file plan_io.hpp
 * @brief Plan documents: JSON round trip and independent verification.
 *
 * On disk vertices and edges are 1-based:
 * {"k": 2, "time": 4, "sinks": [{"edge": 1, "offset": 1}, {"vertex": 4}],
 *  "partition": [[1, 3], [4, 4]]}
 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evac/model.hpp"
#include "evac/solver.hpp"

namespace evac {

/// Sink location as written in a plan, 0-based. offset 0 means vertex `index`.
struct SinkSpec {
  std::size_t index = 0;
  double offset = 0.0;

  friend bool operator==(const SinkSpec&, const SinkSpec&) = default;
};

struct PlanDocument {
  std::size_t k = 0;
  double time = 0.0;
  std::vector<SinkSpec> sinks;
  std::vector<std::pair<std::size_t, std::size_t>> partition;  // 0-based inclusive
};

class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PlanDocument to_document(const SolvePlan& plan);

/// Time is rounded to 12 significant digits; offsets keep full precision.
std::string format_plan(const PlanDocument& doc);
/// Throws PlanError on malformed input.
PlanDocument parse_plan(std::string_view text);

struct VerifyReport {
  bool ok = false;
  double max_time = 0.0;  // largest recomputed segment time (when the structure is valid)
  std::string message;    // describes the first problem found
};

/**
 * Structural checks (cover 0..n-1 disjointly, at most k segments, one sink per
 * segment lying inside it) then recomputation of every segment's time with
 * evacuation_time_ref against doc.time * (1 + 1e-9).
 */
VerifyReport verify_plan(const PrefixIndex& idx, const PlanDocument& doc);

}  // namespace evac
