#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cimbench/energy.hpp"
#include "cimbench/random.hpp"
#include "cimbench/trace.hpp"

namespace cimbench {

// Hopfield-Tank neuron activations. Entries must stay finite; they are not
// clipped to [-1, 1].
struct AnalogState {
  std::vector<double> x;
  double t = 0.0;
  std::uint64_t steps = 0;
};

struct HTNNConfig {
  double alpha = 6.0;  // neuron decay rate
  double beta = 0.1;   // synaptic strength
  double dt = 0.01;    // Euler step
  std::uint64_t max_steps = 1000;
  // Random starts are uniform on [-init_amplitude, init_amplitude].
  double init_amplitude = 0.1;

  // Throws std::invalid_argument unless alpha > 0, beta >= 0, dt > 0.
  void validate() const;
};

AnalogState random_analog_state(std::size_t n, double amplitude, RandomStream& rng);

/// One explicit Euler step of
///   dx_i/dt = -alpha x_i + beta sum_j J_ij tanh(x_j)
/// applied to all neurons at once. Throws DivergenceError (with the index
/// of the failing step) if any activation becomes non-finite.
void htnn_step(const IsingInstance& inst, AnalogState& s, const HTNNConfig& cfg);

// Sign rounding: x > 0 -> +1, x < 0 -> -1, x == 0 -> +1.
std::vector<int> round_signs(std::span<const double> x);
SpinState round_state(const IsingInstance& inst, const AnalogState& s);

// Runs max_steps Euler steps. Trace energies are those of the rounded
// state; the outcome holds the rounded final state.
TrialOutcome htnn_solve(const IsingInstance& inst, AnalogState s, const HTNNConfig& cfg,
                        const TraceConfig& trace_cfg = {});

}  // namespace cimbench
