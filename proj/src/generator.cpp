#include "evac/generator.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace evac {

namespace {

void check(const IntRange& r, std::int64_t min_lo, const char* name) {
  if (r.lo > r.hi || r.lo < min_lo) {
    throw std::invalid_argument(std::string("invalid ") + name + " range");
  }
}

double draw(std::mt19937_64& rng, const IntRange& r) {
  const auto span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
  return static_cast<double>(r.lo + static_cast<std::int64_t>(rng() % span));
}

}  // namespace

PathNetwork generate_instance(const GenOptions& options) {
  if (options.n == 0) throw std::invalid_argument("n must be at least 1");
  check(options.weight, 0, "weight");
  check(options.length, 0, "length");
  check(options.capacity, 1, "capacity");
  if (!(options.tau > 0.0)) throw std::invalid_argument("tau must be positive");

  std::mt19937_64 rng(options.seed);
  PathNetwork net;
  net.tau = options.tau;
  net.weights.reserve(options.n);
  for (std::size_t v = 0; v < options.n; ++v) net.weights.push_back(draw(rng, options.weight));
  const double shared = options.uniform ? draw(rng, options.capacity) : 0.0;
  net.edges.reserve(options.n - 1);
  for (std::size_t e = 0; e + 1 < options.n; ++e) {
    Edge edge;
    edge.length = draw(rng, options.length);
    edge.capacity = options.uniform ? shared : draw(rng, options.capacity);
    net.edges.push_back(edge);
  }
  validate(net);
  return net;
}

}  // namespace evac
