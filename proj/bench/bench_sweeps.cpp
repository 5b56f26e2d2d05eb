// Compares the serial reference sweep against the OpenMP path on the
// randomized identity checks, plus a scalar propagation baseline.

#include <benchmark/benchmark.h>

#include <numbers>

#include "rotkin/properties.hpp"
#include "rotkin/sweep.hpp"

namespace {

constexpr std::uint64_t kSeed = 42;

void BM_FourFormulaSweep(benchmark::State& state, rotkin::Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    rotkin::SweepResult r = rotkin::max_sweep(n, exec, [](std::size_t i) {
      return rotkin::four_formula_case_defect(kSeed, i);
    });
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}

void BM_ConjugationSweep(benchmark::State& state, rotkin::Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    rotkin::SweepResult r = rotkin::max_sweep(n, exec, [](std::size_t i) {
      return rotkin::conjugation_case_defect(kSeed, i);
    });
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}

// Sequential recurrence: one expmap trajectory, no parallel variant.
void BM_PropagateExpmapBody(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  std::vector<rotkin::GyroSample> log;
  log.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    log.push_back(rotkin::GyroSample{
        static_cast<double>(i) * 1e-3,
        rotkin::AngularVelocity{{0.3, -0.2, std::numbers::pi / 4.0}, rotkin::kBody}});
  }
  const auto r0 = rotkin::RotationMatrix::identity(rotkin::kBody, rotkin::kWorld);
  for (auto _ : state) {
    auto traj = rotkin::propagate(r0, log, rotkin::IntegratorChoice::kExpmapBody);
    benchmark::DoNotOptimize(traj);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(steps));
}

}  // namespace

BENCHMARK_CAPTURE(BM_FourFormulaSweep, serial, rotkin::Execution::kSerial)
    ->Arg(1 << 12)
    ->Arg(1 << 15);
BENCHMARK_CAPTURE(BM_FourFormulaSweep, parallel, rotkin::Execution::kParallel)
    ->Arg(1 << 12)
    ->Arg(1 << 15);
BENCHMARK_CAPTURE(BM_ConjugationSweep, serial, rotkin::Execution::kSerial)->Arg(1 << 15);
BENCHMARK_CAPTURE(BM_ConjugationSweep, parallel, rotkin::Execution::kParallel)->Arg(1 << 15);
BENCHMARK(BM_PropagateExpmapBody)->Arg(10000);

BENCHMARK_MAIN();
