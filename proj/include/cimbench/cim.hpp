#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cimbench/energy.hpp"
#include "cimbench/random.hpp"
#include "cimbench/trace.hpp"

namespace cimbench {

// Pulse amplitudes of the OPO network. `s` is all zeros unless the
// two-quadrature mode is enabled.
struct OPOState {
  std::vector<double> c;
  std::vector<double> s;
  std::uint64_t roundtrip = 0;
};

/// Parameters of the measurement-feedback CIM model.
///
/// Each roundtrip r runs three maps:
///   gain     dc_i = (p - c_i^2 - s_i^2) c_i dt
///                   + (1/A_s) sqrt(c_i^2 + s_i^2 + 1/2) dW_i
///   measure  c_i -> sqrt(1 - T_mes) c_i + sqrt(T_mes) f_i / A_s,
///            f_i ~ N(0, 1/2); the measured value is the pre-map c_i
///   inject   c_i -> sqrt(1 - T_inj) c_i + sqrt(T_inj) xi sum_j J_ij c~_j
/// with the pump p(r) ramped linearly from p_start to p_end over
/// ramp_roundtrips and held at p_end afterwards.
struct CIMConfig {
  double p_start = -0.5;
  double p_end = 1.2;
  std::uint64_t ramp_roundtrips = 1000;
  std::uint64_t roundtrips = 1000;
  double dt = 0.01;
  double saturation = 200.0;  // A_s
  double t_mes = 0.1;
  double t_inj = 0.1;
  double xi = 1.0;
  bool noise = true;
  // Evolve s_i with the gain equation under p -> -p. Off by default.
  bool two_quadrature = false;
  unsigned quantize_bits = 0;  // 0 disables quantization of c~
  double quantize_range = 4.0;
  double init_variance = 1e-4;  // c_i(0) ~ N(0, init_variance)

  void validate() const;
  // Pump at roundtrip r (0-based).
  double pump(std::uint64_t r) const;
};

OPOState initial_opo_state(std::size_t n, const CIMConfig& cfg, RandomStream& rng);

// Euler-Maruyama gain step at pump p. Noise draws come from `rng` only when
// cfg.noise is set. Throws DivergenceError on a non-finite amplitude.
void gain_step(OPOState& state, double p, const CIMConfig& cfg, RandomStream& rng);

// Out-coupling map. Returns the measured amplitudes (quantized when
// cfg.quantize_bits > 0).
std::vector<double> measure(OPOState& state, const CIMConfig& cfg, RandomStream& rng);

// Feedback injection map; the coupling sum runs in ascending j.
void inject(OPOState& state, std::span<const double> measured, const IsingInstance& inst,
            const CIMConfig& cfg);

/// Uniform quantizer with 2^bits levels spanning [-range, range].
///
/// Levels sit at (k + 1/2) * step for step = 2 range / (2^bits - 1) and
/// |k| < 2^(bits-1); v is clipped to [-range, range] and sent to the
/// nearest level, with ties resolved away from zero so that
/// quantize(-v) == -quantize(v) exactly.
double quantize(double v, unsigned bits, double range);

/// Full simulation: `roundtrips` iterations of gain, measure, inject.
///
/// Trace energies are those of sign(c) (ties -> +1). When `initial` is
/// empty the start state is drawn from `rng` first. Noise-free runs consume
/// no further random numbers.
TrialOutcome cim_solve(const IsingInstance& inst, const CIMConfig& cfg, RandomStream& rng,
                       const TraceConfig& trace_cfg = {},
                       std::optional<OPOState> initial = std::nullopt);

}  // namespace cimbench
