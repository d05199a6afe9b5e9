#include "cimbench/discrete.hpp"

#include <cmath>
#include <stdexcept>

namespace cimbench {

namespace {

void check_dims(const IsingInstance& inst, const SpinState& x) {
  if (x.size() != inst.size())
    throw std::invalid_argument("initial state size does not match instance");
}

}  // namespace

TrialOutcome hn_solve(const IsingInstance& inst, SpinState x, const HNConfig& cfg,
                      const TraceConfig& trace_cfg) {
  check_dims(inst, x);
  const std::size_t n = inst.size();
  TraceRecorder rec(trace_cfg, "hn", inst);
  double energy = ising_energy(inst, x).value;
  std::uint64_t sweep = 0;
  bool converged = false;
  while (sweep < cfg.max_sweeps) {
    std::size_t flips = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double xh = x.spin(i) * x.field(i);
      if (xh < 0) {
        energy += 2.0 * xh;
        apply_flip(inst, x, i);
        ++flips;
      }
    }
    ++sweep;
    if (rec.due(sweep)) rec.record(sweep, sweep * n, energy);
    if (flips == 0) {
      converged = true;
      break;
    }
  }
  rec.finish(sweep, sweep * n, energy);
  return rec.into_outcome(std::move(x), sweep, converged);
}

void SASchedule::validate() const {
  if (!(tf > 0.0) || !(t0 >= tf) || !std::isfinite(t0))
    throw std::invalid_argument("SA schedule needs t0 >= tf > 0");
  if (steps < 1) throw std::invalid_argument("SA schedule needs steps >= 1");
}

double SASchedule::temperature(std::uint64_t k) const {
  const double frac = static_cast<double>(k) / static_cast<double>(steps);
  if (law == CoolingLaw::linear) return t0 + (tf - t0) * frac;
  return t0 * std::pow(tf / t0, frac);
}

SASchedule make_schedule(const IsingInstance& inst, const SpinState& x0, const SAConfig& cfg) {
  SASchedule s;
  s.tf = cfg.tf;
  s.law = cfg.law;
  s.steps = cfg.steps ? *cfg.steps : cfg.sweeps * inst.size();
  if (cfg.t0) {
    s.t0 = *cfg.t0;
  } else {
    double sum = 0.0;
    for (double h : x0.fields()) sum += std::abs(h);
    const double mean = x0.size() ? sum / static_cast<double>(x0.size()) : 0.0;
    s.t0 = std::max(2.0 * mean, s.tf);
  }
  s.validate();
  return s;
}

bool sa_acceptance(double dE, double T, double u) {
  if (!(T > 0.0)) throw std::invalid_argument("temperature must be positive");
  if (dE <= 0.0) return true;
  return u < std::exp(-dE / T);
}

TrialOutcome sa_solve(const IsingInstance& inst, SpinState x, const SASchedule& sched,
                      RandomStream& rng, const TraceConfig& trace_cfg) {
  check_dims(inst, x);
  sched.validate();
  const std::size_t n = inst.size();
  TraceRecorder rec(trace_cfg, "sa", inst);
  double energy = ising_energy(inst, x).value;
  std::uint64_t sweep = 0;
  for (std::uint64_t k = 0; k < sched.steps; ++k) {
    const auto i = static_cast<std::size_t>(rng.below(n));
    const double dE = 2.0 * x.spin(i) * x.field(i);
    // The uniform draw is consumed only when it matters.
    if (dE <= 0.0 || sa_acceptance(dE, sched.temperature(k), rng.uniform())) {
      apply_flip(inst, x, i);
      energy += dE;
    }
    if ((k + 1) % n == 0) {
      ++sweep;
      if (rec.due(sweep)) rec.record(sweep, k + 1, energy);
    }
  }
  if (sched.steps % n != 0) ++sweep;
  rec.finish(sweep, sched.steps, energy);
  return rec.into_outcome(std::move(x), sweep, true);
}

}  // namespace cimbench
