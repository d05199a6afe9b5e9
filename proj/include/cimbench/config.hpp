#pragma once

#include <string>
#include <string_view>

#include "cimbench/analog.hpp"
#include "cimbench/cim.hpp"
#include "cimbench/discrete.hpp"
#include "cimbench/trace.hpp"

namespace cimbench {

// Parameters for every solver plus trace sampling. Each solver reads only
// its own section.
struct SolverConfig {
  HNConfig hn;
  SAConfig sa;
  HTNNConfig htnn;
  CIMConfig cim;
  TraceConfig trace;
};

// Flat "section.key = value" text, one setting per line; '#' starts a
// comment. Settings not mentioned keep their defaults. Unknown keys and bad
// values raise ParseError with the line number.
//
//   trace.every  trace.clock (wall|work)
//   hn.max_sweeps
//   sa.t0 (number|auto)  sa.tf  sa.sweeps  sa.steps  sa.law (geometric|linear)
//   htnn.alpha  htnn.beta  htnn.dt  htnn.max_steps  htnn.init_amplitude
//   cim.p_start  cim.p_end  cim.ramp_roundtrips  cim.roundtrips  cim.dt
//   cim.saturation  cim.t_mes  cim.t_inj  cim.xi  cim.noise (on|off)
//   cim.two_quadrature (on|off)  cim.quantize_bits  cim.quantize_range
//   cim.init_variance
SolverConfig parse_config(std::string_view text, SolverConfig base = {});
SolverConfig load_config(const std::string& path, SolverConfig base = {});

// Inverse of parse_config: every key, in the order listed above.
std::string format_config(const SolverConfig& cfg);

}  // namespace cimbench
