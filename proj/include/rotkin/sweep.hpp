#pragma once

#include <cstddef>
#include <functional>

#include "rotkin/propagation.hpp"

namespace rotkin {

struct SweepResult {
  double max_value = 0.0;
  std::size_t argmax = 0;
};

// Evaluates fn(i) for i in [0, n) and reduces to the maximum with the first
// index attaining it. The parallel path fills the same per-case buffer with
// OpenMP and reduces it serially, so both execution modes return identical
// results for pure fn. Exceptions thrown by fn are rethrown on the calling
// thread. n = 0 yields {0, 0}.
SweepResult max_sweep(std::size_t n, Execution exec,
                      const std::function<double(std::size_t)>& fn);

}  // namespace rotkin
