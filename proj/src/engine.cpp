#include "evac/engine.hpp"

namespace evac {

std::string_view to_string(Backend b) noexcept {
  return b == Backend::uniform ? "uniform" : "general";
}

SinkEngine::SinkEngine(PathNetwork net, BackendChoice choice)
    : SinkEngine(std::make_shared<const PrefixIndex>(std::move(net)), choice) {}

SinkEngine::SinkEngine(std::shared_ptr<const PrefixIndex> index, BackendChoice choice)
    : index_(std::move(index)) {
  const bool uniform = choice == BackendChoice::uniform ||
                       (choice == BackendChoice::automatic && index_->network().uniform_capacity());
  if (uniform) {
    backend_ = Backend::uniform;
    uniform_ = std::make_unique<UniformTree>(index_);
  } else {
    backend_ = Backend::general;
    general_ = std::make_unique<CCTree>(index_);
  }
}

const TreeTopology& SinkEngine::topology() const noexcept {
  return general_ ? general_->topology() : uniform_->topology();
}

std::uint64_t SinkEngine::build_work() const noexcept {
  return general_ ? general_->build_work() : uniform_->build_merges();
}

CriticalCandidate SinkEngine::theta_L(std::size_t i, std::size_t j) const {
  return general_ ? general_->theta_L(i, j) : uniform_->theta_L(i, j);
}

CriticalCandidate SinkEngine::theta_R(std::size_t i, std::size_t j, Point s) const {
  return general_ ? general_->theta_R(i, j, s) : uniform_->theta_R(i, j, s);
}

}  // namespace evac
