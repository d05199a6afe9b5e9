#include "cimbench/cim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cimbench/analog.hpp"
#include "cimbench/error.hpp"

namespace cimbench {

void CIMConfig::validate() const {
  if (!(t_mes >= 0.0 && t_mes <= 1.0)) throw std::invalid_argument("cim t_mes must be in [0, 1]");
  if (!(t_inj >= 0.0 && t_inj <= 1.0)) throw std::invalid_argument("cim t_inj must be in [0, 1]");
  if (!(dt > 0.0)) throw std::invalid_argument("cim dt must be > 0");
  if (!(saturation > 0.0)) throw std::invalid_argument("cim saturation must be > 0");
  if (!(p_end >= p_start)) throw std::invalid_argument("cim pump must be non-decreasing");
  if (!std::isfinite(p_start) || !std::isfinite(p_end) || !std::isfinite(xi))
    throw std::invalid_argument("cim pump and gain must be finite");
  if (quantize_bits > 52) throw std::invalid_argument("cim quantize_bits must be <= 52");
  if (quantize_bits > 0 && !(quantize_range > 0.0))
    throw std::invalid_argument("cim quantize_range must be > 0");
  if (!(init_variance >= 0.0)) throw std::invalid_argument("cim init_variance must be >= 0");
}

double CIMConfig::pump(std::uint64_t r) const {
  if (ramp_roundtrips <= 1 || r + 1 >= ramp_roundtrips) return p_end;
  const double frac = static_cast<double>(r) / static_cast<double>(ramp_roundtrips - 1);
  return p_start + (p_end - p_start) * frac;
}

OPOState initial_opo_state(std::size_t n, const CIMConfig& cfg, RandomStream& rng) {
  OPOState st;
  st.c.resize(n);
  st.s.assign(n, 0.0);
  const double sd = std::sqrt(cfg.init_variance);
  for (auto& v : st.c) v = sd * rng.normal();
  return st;
}

namespace {

void check_finite(std::span<const double> v, std::uint64_t roundtrip) {
  for (double x : v) {
    if (!std::isfinite(x)) throw DivergenceError("cim", roundtrip);
  }
}

}  // namespace

void gain_step(OPOState& st, double p, const CIMConfig& cfg, RandomStream& rng) {
  const std::size_t n = st.c.size();
  if (st.s.size() != n) st.s.assign(n, 0.0);
  const double sqrt_dt = std::sqrt(cfg.dt);
  const double noise_scale = sqrt_dt / cfg.saturation;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = st.c[i];
    const double s = st.s[i];
    const double r2 = c * c + s * s;
    double dc = (p - r2) * c * cfg.dt;
    if (cfg.noise) dc += noise_scale * std::sqrt(r2 + 0.5) * rng.normal();
    if (cfg.two_quadrature) {
      double ds = (-p - r2) * s * cfg.dt;
      if (cfg.noise) ds += noise_scale * std::sqrt(r2 + 0.5) * rng.normal();
      st.s[i] = s + ds;
    }
    st.c[i] = c + dc;
  }
  check_finite(st.c, st.roundtrip);
  check_finite(st.s, st.roundtrip);
}

std::vector<double> measure(OPOState& st, const CIMConfig& cfg, RandomStream& rng) {
  std::vector<double> measured = st.c;
  if (cfg.quantize_bits > 0) {
    for (auto& v : measured) v = quantize(v, cfg.quantize_bits, cfg.quantize_range);
  }
  if (cfg.t_mes == 0.0) return measured;
  const double keep = std::sqrt(1.0 - cfg.t_mes);
  const double leak = std::sqrt(cfg.t_mes) / cfg.saturation;
  // f_i ~ N(0, 1/2)
  const double vacuum_sd = std::sqrt(0.5);
  for (auto& c : st.c) {
    c *= keep;
    if (cfg.noise) c += leak * vacuum_sd * rng.normal();
  }
  if (cfg.two_quadrature) {
    for (auto& s : st.s) {
      s *= keep;
      if (cfg.noise) s += leak * vacuum_sd * rng.normal();
    }
  }
  return measured;
}

void inject(OPOState& st, std::span<const double> measured, const IsingInstance& inst,
            const CIMConfig& cfg) {
  const std::size_t n = inst.size();
  if (measured.size() != n || st.c.size() != n)
    throw std::invalid_argument("measured amplitudes do not match instance size");
  if (cfg.t_inj == 0.0) return;
  std::vector<double> feedback(n);
  inst.multiply_couplings(measured, feedback);
  const double keep = std::sqrt(1.0 - cfg.t_inj);
  const double gain = std::sqrt(cfg.t_inj) * cfg.xi;
  for (std::size_t i = 0; i < n; ++i) st.c[i] = keep * st.c[i] + gain * feedback[i];
  if (cfg.two_quadrature) {
    for (auto& s : st.s) s *= keep;
  }
  check_finite(st.c, st.roundtrip);
}

double quantize(double v, unsigned bits, double range) {
  if (bits < 1 || bits > 52) throw std::invalid_argument("quantize bits must be in [1, 52]");
  if (!(range > 0.0) || !std::isfinite(range))
    throw std::invalid_argument("quantize range must be positive");
  if (std::isnan(v)) throw std::invalid_argument("cannot quantize NaN");
  const double levels = std::ldexp(1.0, static_cast<int>(bits));
  const double step = 2.0 * range / (levels - 1.0);
  const double top = levels / 2.0 - 1.0;  // largest k
  const double mag = std::min(std::abs(v), range);
  const double k = std::min(std::floor(mag / step), top);
  return std::copysign((k + 0.5) * step, v);
}

TrialOutcome cim_solve(const IsingInstance& inst, const CIMConfig& cfg, RandomStream& rng,
                       const TraceConfig& trace_cfg, std::optional<OPOState> initial) {
  cfg.validate();
  const std::size_t n = inst.size();
  OPOState st = initial ? std::move(*initial) : initial_opo_state(n, cfg, rng);
  if (st.c.size() != n) throw std::invalid_argument("OPO state size does not match instance");
  if (st.s.size() != n) st.s.assign(n, 0.0);
  check_finite(st.c, st.roundtrip);

  TraceRecorder rec(trace_cfg, "cim", inst);
  auto sign_energy = [&] { return ising_energy(inst, pack_spins(round_signs(st.c))).value; };
  std::uint64_t r = 0;
  for (; r < cfg.roundtrips; ++r) {
    gain_step(st, cfg.pump(r), cfg, rng);
    const auto measured = measure(st, cfg, rng);
    inject(st, measured, inst, cfg);
    ++st.roundtrip;
    if (rec.due(r + 1)) rec.record(r + 1, (r + 1) * n, sign_energy());
  }
  rec.finish(r, r * n, sign_energy());
  return rec.into_outcome(SpinState::from_spins(inst, round_signs(st.c)), r, true);
}

}  // namespace cimbench
