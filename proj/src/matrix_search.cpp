#include "evac/matrix_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "evac/op_counters.hpp"
#include "evac/solver.hpp"

namespace evac {

double OptMatrixView::entry(std::size_t row, std::size_t col) const {
  const std::size_t n = size();
  if (row >= n || col >= n) throw std::out_of_range("matrix entry out of range");
  const std::size_t i = n - 1 - row;
  if (i >= col) return 0.0;
  const std::uint64_t key = static_cast<std::uint64_t>(row) * n + col;
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  ++op_counters().entry_evals;
  const double value = find_1sink(engine_, i, col).time;
  std::lock_guard lock(mutex_);
  cache_.emplace(key, value);
  return value;
}

std::uint64_t OptMatrixView::evaluations() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

namespace {

struct Block {
  std::size_t row = 0;
  std::size_t col = 0;
  double min = 0.0;
  double max = 0.0;
};

class Search {
 public:
  Search(const SinkEngine& engine, std::size_t k) : engine_(engine), matrix_(engine), k_(k) {}

  double run() {
    const std::size_t n = engine_.size();
    std::size_t side = std::bit_ceil(n);
    std::vector<Block> blocks{{0, 0, value(0, 0), value(side - 1, side - 1)}};

    while (side > 1) {
      side /= 2;
      std::vector<Block> next;
      next.reserve(blocks.size() * 4);
      for (const Block& b : blocks) {
        for (std::size_t dr = 0; dr < 2; ++dr) {
          for (std::size_t dc = 0; dc < 2; ++dc) {
            Block q{b.row + dr * side, b.col + dc * side, 0.0, 0.0};
            q.min = value(q.row, q.col);
            if (q.min >= hi_) continue;  // cannot beat the best feasible value
            q.max = side == 1 ? q.min : value(q.row + side - 1, q.col + side - 1);
            if (q.max <= lo_) continue;  // every value is infeasible
            next.push_back(q);
          }
        }
      }
      blocks = std::move(next);
      if (side == 1) break;

      // All blocks share one size, so the weighted medians reduce to plain medians.
      probe_median(blocks, [](const Block& b) { return b.max; });
      prune(blocks);
      probe_median(blocks, [](const Block& b) { return b.min; });
      prune(blocks);
    }

    std::vector<double> candidates;
    candidates.reserve(blocks.size());
    for (const Block& b : blocks) {
      if (b.min > lo_ && b.min < hi_) candidates.push_back(b.min);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::size_t a = 0, z = candidates.size();
    while (a < z) {
      const std::size_t mid = a + (z - a) / 2;
      if (test(candidates[mid])) {
        z = mid;
      } else {
        a = mid + 1;
      }
    }
    return hi_;
  }

  std::uint64_t entry_evals() const { return matrix_.evaluations(); }
  std::uint64_t tests() const { return tests_; }

 private:
  double value(std::size_t row, std::size_t col) const {
    const std::size_t n = engine_.size();
    if (row >= n || col >= n) return kInfinity;
    return matrix_.entry(row, col);
  }

  bool test(double t) {
    ++tests_;
    if (feasible(engine_, t, k_).feasible) {
      hi_ = std::min(hi_, t);
      return true;
    }
    lo_ = std::max(lo_, t);
    return false;
  }

  template <class Key>
  void probe_median(const std::vector<Block>& blocks, Key key) {
    std::vector<double> vals;
    vals.reserve(blocks.size());
    for (const Block& b : blocks) {
      const double v = key(b);
      if (v > lo_ && v < hi_ && v != kInfinity) vals.push_back(v);
    }
    if (vals.empty()) return;
    auto mid = vals.begin() + static_cast<std::ptrdiff_t>(vals.size() / 2);
    std::nth_element(vals.begin(), mid, vals.end());
    test(*mid);
  }

  void prune(std::vector<Block>& blocks) const {
    std::erase_if(blocks, [&](const Block& b) { return b.min >= hi_ || b.max <= lo_; });
  }

  const SinkEngine& engine_;
  OptMatrixView matrix_;
  std::size_t k_;
  double lo_ = -1.0;  // largest value known infeasible
  double hi_ = kInfinity;
  std::uint64_t tests_ = 0;
};

void check_k(const SinkEngine& engine, std::size_t k) {
  if (k < 1 || k > engine.size()) throw std::invalid_argument("k must lie in [1, n]");
}

}  // namespace

double sorted_matrix_search(const SinkEngine& engine, std::size_t k, SearchStats* stats) {
  check_k(engine, k);
  Search search(engine, k);
  const double t = search.run();
  if (stats) *stats = {search.entry_evals(), search.tests()};
  return t;
}

double bisect_search(const SinkEngine& engine, std::size_t k, SearchStats* stats) {
  check_k(engine, k);
  const std::size_t n = engine.size();
  OptMatrixView matrix(engine);
  std::vector<double> values;
  values.reserve(n * (n + 1) / 2 + 1);
  values.push_back(0.0);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = n - 1 - row; col < n; ++col) values.push_back(matrix.entry(row, col));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::uint64_t tests = 0;
  std::size_t a = 0, z = values.size() - 1;  // values.back() (the whole path with one sink) suffices
  while (a < z) {
    const std::size_t mid = a + (z - a) / 2;
    ++tests;
    if (feasible(engine, values[mid], k).feasible) {
      z = mid;
    } else {
      a = mid + 1;
    }
  }
  if (stats) *stats = {matrix.evaluations(), tests};
  return values[a];
}

}  // namespace evac
