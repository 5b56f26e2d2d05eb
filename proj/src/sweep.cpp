#include "rotkin/sweep.hpp"

#include <exception>
#include <vector>

namespace rotkin {

SweepResult max_sweep(std::size_t n, Execution exec,
                      const std::function<double(std::size_t)>& fn) {
  if (n == 0) return SweepResult{};

  std::vector<double> values(n);
  std::exception_ptr failure;

  const bool parallel = exec == Execution::kParallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      values[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  (void)parallel;
  if (failure) std::rethrow_exception(failure);

  // Serial reduction keeps the result independent of thread scheduling.
  SweepResult result{values[0], 0};
  for (std::size_t i = 1; i < n; ++i) {
    if (values[i] > result.max_value) {
      result.max_value = values[i];
      result.argmax = i;
    }
  }
  return result;
}

}  // namespace rotkin
