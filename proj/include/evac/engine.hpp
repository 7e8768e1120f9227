#pragma once

#include <memory>
#include <string_view>

#include "evac/cctree.hpp"
#include "evac/model.hpp"
#include "evac/uniform.hpp"

namespace evac {

enum class Backend { general, uniform };
enum class BackendChoice { automatic, general, uniform };

std::string_view to_string(Backend b) noexcept;

/**
 * @brief Theta queries and L/R-tests over either backend with one contract.
 *
 * `automatic` picks the uniform tree when every edge has the same capacity.
 * Requesting `uniform` on a network with mixed capacities throws
 * std::invalid_argument.
 */
class SinkEngine {
 public:
  explicit SinkEngine(PathNetwork net, BackendChoice choice = BackendChoice::automatic);
  SinkEngine(std::shared_ptr<const PrefixIndex> index, BackendChoice choice);

  Backend backend() const noexcept { return backend_; }
  const PrefixIndex& index() const noexcept { return *index_; }
  const std::shared_ptr<const PrefixIndex>& shared_index() const noexcept { return index_; }
  const TreeTopology& topology() const noexcept;
  std::size_t size() const noexcept { return index_->size(); }

  const CCTree* general_tree() const noexcept { return general_.get(); }
  const UniformTree* uniform_tree() const noexcept { return uniform_.get(); }

  /// Envelope line pushes/pops (general) or summary merges (uniform) spent on construction.
  std::uint64_t build_work() const noexcept;

  CriticalCandidate theta_L(std::size_t i, std::size_t j) const;
  CriticalCandidate theta_R(std::size_t i, std::size_t j, Point s) const;
  bool l_test(std::size_t i, std::size_t j, double t) const { return within(theta_L(i, j).cost, t); }
  bool r_test(std::size_t i, std::size_t j, Point s, double t) const {
    return within(theta_R(i, j, s).cost, t);
  }

  CriticalCandidate theta_L_unchecked(std::size_t i, std::size_t j) const noexcept {
    return general_ ? general_->theta_L_unchecked(i, j) : uniform_->theta_L_unchecked(i, j);
  }
  CriticalCandidate theta_R_unchecked(std::size_t i, std::size_t j, Point s) const noexcept {
    return general_ ? general_->theta_R_unchecked(i, j, s) : uniform_->theta_R_unchecked(i, j, s);
  }

 private:
  std::shared_ptr<const PrefixIndex> index_;
  Backend backend_ = Backend::general;
  std::unique_ptr<CCTree> general_;
  std::unique_ptr<UniformTree> uniform_;
};

}  // namespace evac
