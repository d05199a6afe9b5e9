#include "cimbench/analog.hpp"

#include <cmath>
#include <stdexcept>

#include "cimbench/error.hpp"

namespace cimbench {

void HTNNConfig::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("htnn alpha must be > 0");
  if (!(beta >= 0.0)) throw std::invalid_argument("htnn beta must be >= 0");
  if (!(dt > 0.0)) throw std::invalid_argument("htnn dt must be > 0");
  if (!(init_amplitude >= 0.0)) throw std::invalid_argument("htnn init_amplitude must be >= 0");
}

AnalogState random_analog_state(std::size_t n, double amplitude, RandomStream& rng) {
  AnalogState s;
  s.x.resize(n);
  for (auto& v : s.x) v = rng.uniform(-amplitude, amplitude);
  return s;
}

namespace {

// Scratch buffers reused across steps.
struct Workspace {
  std::vector<double> act;
  std::vector<double> input;
};

void step_into(const IsingInstance& inst, AnalogState& s, const HTNNConfig& cfg,
               Workspace& ws) {
  const std::size_t n = s.x.size();
  ws.act.resize(n);
  ws.input.resize(n);
  for (std::size_t j = 0; j < n; ++j) ws.act[j] = std::tanh(s.x[j]);
  inst.multiply_couplings(ws.act, ws.input);
  bool finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    s.x[i] += cfg.dt * (-cfg.alpha * s.x[i] + cfg.beta * ws.input[i]);
    finite = finite && std::isfinite(s.x[i]);
  }
  s.t += cfg.dt;
  ++s.steps;
  if (!finite) throw DivergenceError("htnn", s.steps);
}

void check_state(const IsingInstance& inst, const AnalogState& s) {
  if (s.x.size() != inst.size())
    throw std::invalid_argument("analog state size does not match instance");
  for (double v : s.x) {
    if (!std::isfinite(v)) throw DivergenceError("htnn", s.steps);
  }
}

}  // namespace

void htnn_step(const IsingInstance& inst, AnalogState& s, const HTNNConfig& cfg) {
  cfg.validate();
  check_state(inst, s);
  Workspace ws;
  step_into(inst, s, cfg, ws);
}

std::vector<int> round_signs(std::span<const double> x) {
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] < 0.0 ? -1 : 1;
  return out;
}

SpinState round_state(const IsingInstance& inst, const AnalogState& s) {
  return SpinState::from_spins(inst, round_signs(s.x));
}

TrialOutcome htnn_solve(const IsingInstance& inst, AnalogState s, const HTNNConfig& cfg,
                        const TraceConfig& trace_cfg) {
  cfg.validate();
  check_state(inst, s);
  const std::size_t n = inst.size();
  TraceRecorder rec(trace_cfg, "htnn", inst);
  Workspace ws;
  auto rounded_energy = [&] {
    return ising_energy(inst, pack_spins(round_signs(s.x))).value;
  };
  std::uint64_t step = 0;
  for (; step < cfg.max_steps; ++step) {
    step_into(inst, s, cfg, ws);
    if (rec.due(step + 1)) rec.record(step + 1, (step + 1) * n, rounded_energy());
  }
  rec.finish(step, step * n, rounded_energy());
  return rec.into_outcome(round_state(inst, s), step, true);
}

}  // namespace cimbench
