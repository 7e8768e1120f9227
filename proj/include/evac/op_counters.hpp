#pragma once

#include <cstdint>

namespace evac {

/// Per-thread operation counters used for empirical scaling checks.
struct OpCounters {
  std::uint64_t candidate_evals = 0;    // cost_L/R_node calls, or summary merges (uniform)
  std::uint64_t feasibility_tests = 0;  // calls to feasible()
  std::uint64_t entry_evals = 0;        // matrix entries computed via find_1sink
  std::uint64_t exclusivity_violations = 0;
  std::uint64_t maximality_violations = 0;

  void reset() noexcept { *this = OpCounters{}; }
};

OpCounters& op_counters() noexcept;

}  // namespace evac
