#include "cimbench/trace.hpp"

#include <algorithm>

namespace cimbench {

std::optional<TargetHit> time_to_target(const EnergyTrace& trace, double target) {
  for (const auto& s : trace.samples) {
    if (s.energy <= target) return TargetHit{s.iteration, s.elapsed_ns};
  }
  return std::nullopt;
}

TraceRecorder::TraceRecorder(const TraceConfig& cfg, std::string solver,
                             const IsingInstance& inst)
    : cfg_(cfg), inst_(&inst), start_(std::chrono::steady_clock::now()) {
  trace_.solver = std::move(solver);
}

void TraceRecorder::record(std::uint64_t iteration, std::uint64_t work, double energy) {
  std::uint64_t stamp = work;
  if (cfg_.clock == ClockMode::wall) {
    const auto d = std::chrono::steady_clock::now() - start_;
    stamp = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(d).count());
  }
  const std::uint64_t floor = trace_.samples.empty() ? 1 : trace_.samples.back().elapsed_ns + 1;
  stamp = std::max(stamp, floor);
  trace_.samples.push_back({iteration, stamp, energy, (inst_->total_weight() - energy) / 2.0});
}

void TraceRecorder::finish(std::uint64_t iteration, std::uint64_t work, double energy) {
  if (!trace_.samples.empty() && trace_.samples.back().iteration == iteration) return;
  record(iteration, work, energy);
}

TrialOutcome TraceRecorder::into_outcome(SpinState final_state, std::uint64_t sweeps,
                                         bool converged) {
  TrialOutcome out;
  out.final_energy = ising_energy(*inst_, final_state);
  out.final_state = std::move(final_state);
  out.sweeps = sweeps;
  out.converged = converged;
  out.trace = std::move(trace_);
  if (cfg_.target) out.reached_target = time_to_target(out.trace, *cfg_.target);
  return out;
}

}  // namespace cimbench
