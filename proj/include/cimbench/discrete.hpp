#pragma once

#include <cstdint>
#include <optional>

#include "cimbench/energy.hpp"
#include "cimbench/random.hpp"
#include "cimbench/trace.hpp"

namespace cimbench {

struct HNConfig {
  std::uint64_t max_sweeps = 1000;
};

/// Derandomized Hopfield network.
///
/// Each sweep visits i = 0..n-1 in order and sets x_i = sgn(h_i); a zero
/// field leaves x_i unchanged, so every flip strictly lowers the energy.
/// Stops after a sweep with no flip (converged = true) or at max_sweeps.
TrialOutcome hn_solve(const IsingInstance& inst, SpinState x0, const HNConfig& cfg,
                      const TraceConfig& trace_cfg = {});

enum class CoolingLaw { geometric, linear };

// Temperature at attempt k in [0, steps):
//   geometric  T_k = T0 (Tf/T0)^(k/steps)
//   linear     T_k = T0 + (Tf - T0) k/steps
struct SASchedule {
  double t0 = 1.0;
  double tf = 0.05;
  std::uint64_t steps = 1;
  CoolingLaw law = CoolingLaw::geometric;

  // Throws std::invalid_argument unless t0 >= tf > 0 and steps >= 1.
  void validate() const;
  double temperature(std::uint64_t k) const;
};

// User-facing SA parameters; unset fields resolve against the instance.
struct SAConfig {
  std::optional<double> t0;  // default: 2 * mean |h_i| of the start state
  double tf = 0.05;
  std::uint64_t sweeps = 1000;         // steps = sweeps * n ...
  std::optional<std::uint64_t> steps;  // ... unless given explicitly
  CoolingLaw law = CoolingLaw::geometric;
};

// Resolves defaults. An automatic T0 below tf is raised to tf.
SASchedule make_schedule(const IsingInstance& inst, const SpinState& x0, const SAConfig& cfg);

// Metropolis rule: dE <= 0 always accepts, otherwise accept iff
// u < exp(-dE/T). Throws std::invalid_argument for T <= 0.
bool sa_acceptance(double dE, double T, double u);

/// Single-spin-flip simulated annealing. One step picks i uniformly from the
/// stream and applies sa_acceptance with the schedule's temperature. The
/// trace iteration is the sweep count (n attempts per sweep).
TrialOutcome sa_solve(const IsingInstance& inst, SpinState x0, const SASchedule& sched,
                      RandomStream& rng, const TraceConfig& trace_cfg = {});

}  // namespace cimbench
