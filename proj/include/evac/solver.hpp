/**
 * @file solver.hpp
 * @brief Greedy (t, k)-feasibility, 1-sink location, and the k-sink solve.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evac/engine.hpp"
#include "evac/model.hpp"

namespace evac {

/**
 * One greedy segment [first, last] served by `sink`. Vertices first..left_end
 * evacuate rightward into the sink, left_end+1..last leftward. When even
 * `first` alone fails the L-test, left_end == first and the sink is v_first.
 */
struct Segment {
  std::size_t first = 0;
  std::size_t left_end = 0;
  Point sink;
  std::size_t last = 0;
};

struct SolvePlan {
  std::size_t k = 0;
  double time = 0.0;
  std::vector<Segment> segments;  // contiguous, left to right, covering every vertex

  std::vector<Point> sinks() const;
};

/// Largest segment starting at `a` that one sink serves within time t.
Segment isolate_subpath(const SinkEngine& engine, double t, std::size_t a);

/// True if neither side of `seg` could be extended by one vertex at time t.
bool segment_is_maximal(const SinkEngine& engine, const Segment& seg, double t);

struct OneSink {
  Point sink;
  double time = 0.0;
};

/// Optimal single sink for [v_i, v_j] and its evacuation time.
OneSink find_1sink(const SinkEngine& engine, std::size_t i, std::size_t j);

struct Feasibility {
  bool feasible = false;
  std::optional<SolvePlan> plan;  // set when feasible; time is the tested t
};

/// Greedy (t, k)-feasibility. With `check_invariants`, every isolated segment is
/// checked for maximality and failures are counted in op_counters().
Feasibility feasible(const SinkEngine& engine, double t, std::size_t k,
                     bool check_invariants = false);

enum class Optimizer { sorted_matrix, bisect };

struct SolveOptions {
  BackendChoice backend = BackendChoice::automatic;
  Optimizer optimizer = Optimizer::sorted_matrix;
  bool check_invariants = false;
};

/// Optimal k-sink plan. k larger than n is clamped to n; throws std::invalid_argument for k == 0.
SolvePlan solve_ksink(const SinkEngine& engine, std::size_t k, const SolveOptions& options = {});
SolvePlan solve_ksink(const PathNetwork& net, std::size_t k, const SolveOptions& options = {});

}  // namespace evac
