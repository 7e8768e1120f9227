#include "evac/op_counters.hpp"

namespace evac {

OpCounters& op_counters() noexcept {
  thread_local OpCounters counters;
  return counters;
}

}  // namespace evac
