#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cimbench/energy.hpp"

namespace cimbench {

// How trace timestamps are produced.
enum class ClockMode {
  wall,  // steady_clock nanoseconds since the solver started
  work,  // count of elementary spin/neuron/pulse updates; reproducible
};

struct TraceConfig {
  // Record every `every`-th iteration (sweep, Euler step or roundtrip). The
  // last iteration is always recorded.
  std::uint64_t every = 1;
  ClockMode clock = ClockMode::wall;
  // When set, TrialOutcome::reached_target is filled from the trace.
  std::optional<double> target;
};

struct TraceSample {
  std::uint64_t iteration = 0;
  std::uint64_t elapsed_ns = 0;
  double energy = 0.0;
  double cut = 0.0;
  friend bool operator==(const TraceSample&, const TraceSample&) = default;
};

// Samples have strictly increasing elapsed_ns (>= 1) and non-decreasing
// iteration. cut = (W - energy) / 2 at every sample.
struct EnergyTrace {
  std::string solver;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::vector<TraceSample> samples;
  friend bool operator==(const EnergyTrace&, const EnergyTrace&) = default;
};

struct TargetHit {
  std::uint64_t iteration = 0;
  std::uint64_t elapsed_ns = 0;
  friend bool operator==(const TargetHit&, const TargetHit&) = default;
};

// First sample with energy <= target.
std::optional<TargetHit> time_to_target(const EnergyTrace& trace, double target);

struct TrialOutcome {
  SpinState final_state;
  Energy final_energy;
  EnergyTrace trace;
  std::uint64_t sweeps = 0;
  // HN: the last sweep made no flip. Other solvers: ran to their budget.
  bool converged = false;
  std::optional<TargetHit> reached_target;
};

// Solver-side helper that owns the clock and the sample buffer.
class TraceRecorder {
 public:
  TraceRecorder(const TraceConfig& cfg, std::string solver, const IsingInstance& inst);

  bool due(std::uint64_t iteration) const noexcept {
    return cfg_.every <= 1 || iteration % cfg_.every == 0;
  }
  // `work` is the number of elementary updates performed so far; it is the
  // timestamp under ClockMode::work.
  void record(std::uint64_t iteration, std::uint64_t work, double energy);
  // Records the final iteration unless it was the last sample taken.
  void finish(std::uint64_t iteration, std::uint64_t work, double energy);

  TrialOutcome into_outcome(SpinState final_state, std::uint64_t sweeps, bool converged);

 private:
  TraceConfig cfg_;
  const IsingInstance* inst_;
  EnergyTrace trace_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cimbench
