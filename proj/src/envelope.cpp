#include "evac/envelope.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace evac {

namespace {

constexpr double kNoBreak = std::numeric_limits<double>::infinity();

// Abscissa where `b` (larger slope) overtakes `a`.
inline double crossing(const Line& a, const Line& b) noexcept {
  return (a.intercept - b.intercept) / (b.slope - a.slope);
}

bool sorted_in(std::span<const Line> lines, SlopeOrder order) {
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const bool ok = order == SlopeOrder::nondecreasing ? lines[k - 1].slope <= lines[k].slope
                                                       : lines[k - 1].slope >= lines[k].slope;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

EnvelopeHit EnvelopeView::query(double x) const noexcept {
  const std::size_t m = lines_.size();
  auto first = breaks_.begin();
  std::size_t k = static_cast<std::size_t>(std::lower_bound(first, first + (m - 1), x) - first);
  if (k + 1 < m && breaks_[k] == x && lines_[k + 1].tag < lines_[k].tag) ++k;
  return {lines_[k].tag, lines_[k].at(x)};
}

std::size_t append_upper_envelope(std::span<const Line> lines, SlopeOrder order,
                                  std::vector<Line>& out_lines, std::vector<double>& out_breaks,
                                  std::uint64_t* work) {
#ifndef NDEBUG
  if (!sorted_in(lines, order)) throw std::invalid_argument("envelope input slopes are not sorted");
#endif
  const std::size_t base = out_lines.size();
  std::uint64_t ops = 0;

  auto add = [&](const Line& line) {
    while (out_lines.size() > base) {
      const Line& back = out_lines.back();
      if (line.slope == back.slope) {
        const bool replaces = line.intercept > back.intercept ||
                              (line.intercept == back.intercept && line.tag < back.tag);
        if (!replaces) return;
        out_lines.pop_back();
        out_breaks.pop_back();
        ++ops;
        continue;
      }
      if (out_lines.size() - base >= 2 && crossing(back, line) <= out_breaks[out_breaks.size() - 2]) {
        out_lines.pop_back();
        out_breaks.pop_back();
        ++ops;
        continue;
      }
      break;
    }
    if (out_lines.size() > base) out_breaks.back() = crossing(out_lines.back(), line);
    out_lines.push_back(line);
    out_breaks.push_back(kNoBreak);
    ++ops;
  };

  if (order == SlopeOrder::nondecreasing) {
    for (const Line& line : lines) add(line);
  } else {
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) add(*it);
  }

  // Drop lines whose whole piece lies left of x = 0.
  std::size_t drop = 0;
  while (base + drop + 1 < out_lines.size() && out_breaks[base + drop] < 0.0) ++drop;
  if (drop > 0) {
    out_lines.erase(out_lines.begin() + static_cast<std::ptrdiff_t>(base),
                    out_lines.begin() + static_cast<std::ptrdiff_t>(base + drop));
    out_breaks.erase(out_breaks.begin() + static_cast<std::ptrdiff_t>(base),
                     out_breaks.begin() + static_cast<std::ptrdiff_t>(base + drop));
    ops += drop;
  }
  if (work) *work += ops;
  return out_lines.size() - base;
}

Envelope::Envelope(std::span<const Line> lines, SlopeOrder order) {
  if (lines.empty()) throw std::invalid_argument("envelope of an empty line family");
  if (!sorted_in(lines, order)) throw std::invalid_argument("envelope input slopes are not sorted");
  append_upper_envelope(lines, order, lines_, breaks_);
}

}  // namespace evac
