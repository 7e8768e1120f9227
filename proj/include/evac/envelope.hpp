/**
 * @file envelope.hpp
 * @brief Upper envelopes of lines with monotone slopes, evaluated on x >= 0.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace evac {

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  std::uint32_t tag = 0;

  double at(double x) const noexcept { return slope * x + intercept; }
};

enum class SlopeOrder { nondecreasing, nonincreasing };

struct EnvelopeHit {
  std::uint32_t tag;
  double value;
};

/**
 * Non-owning view of an envelope: surviving lines in increasing slope order,
 * and breaks[k] = abscissa where lines[k+1] overtakes lines[k]. breaks has the
 * same length as lines; its last slot holds +inf.
 */
class EnvelopeView {
 public:
  EnvelopeView() = default;
  EnvelopeView(std::span<const Line> lines, std::span<const double> breaks) noexcept
      : lines_(lines), breaks_(breaks) {}

  /// Maximizing line at x (x >= 0). At a breakpoint the smaller tag wins.
  EnvelopeHit query(double x) const noexcept;

  std::size_t size() const noexcept { return lines_.size(); }
  std::span<const Line> lines() const noexcept { return lines_; }
  std::span<const double> breakpoints() const noexcept { return breaks_.first(breaks_.empty() ? 0 : breaks_.size() - 1); }

 private:
  std::span<const Line> lines_;
  std::span<const double> breaks_;
};

/**
 * Appends the upper envelope of `lines` (sorted by slope in `order`) to the
 * output buffers and returns the number of surviving lines. Linear time: one
 * stack scan in the dual, popping on non-strict turns. Equal slopes keep the
 * larger intercept, then the smaller tag. Lines that are maximal only for
 * x < 0 are dropped. `work`, when given, is incremented once per push and pop.
 */
std::size_t append_upper_envelope(std::span<const Line> lines, SlopeOrder order,
                                  std::vector<Line>& out_lines, std::vector<double>& out_breaks,
                                  std::uint64_t* work = nullptr);

class Envelope {
 public:
  /// Throws std::invalid_argument if slopes are not sorted in `order`.
  Envelope(std::span<const Line> lines, SlopeOrder order);

  EnvelopeHit query(double x) const noexcept { return view().query(x); }
  EnvelopeView view() const noexcept { return {lines_, breaks_}; }
  std::size_t size() const noexcept { return lines_.size(); }
  std::span<const Line> lines() const noexcept { return lines_; }
  std::span<const double> breakpoints() const noexcept { return view().breakpoints(); }

 private:
  std::vector<Line> lines_;
  std::vector<double> breaks_;
};

inline Envelope build_upper_envelope(std::span<const Line> lines, SlopeOrder order) {
  return Envelope(lines, order);
}

}  // namespace evac
