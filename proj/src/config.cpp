#include "cimbench/config.hpp"

#include <functional>
#include <map>

#include "cimbench/error.hpp"
#include "text.hpp"

namespace cimbench {

namespace {

using Setter = std::function<bool(SolverConfig&, std::string_view)>;

template <class T>
Setter set_number(T SolverConfig::*section, auto member) {
  return [=](SolverConfig& c, std::string_view v) {
    using V = std::remove_reference_t<decltype(c.*section.*member)>;
    const auto parsed = text::parse_number<V>(v);
    if (!parsed) return false;
    c.*section.*member = *parsed;
    return true;
  };
}

std::optional<bool> parse_flag(std::string_view v) {
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  return std::nullopt;
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"trace.every", set_number(&SolverConfig::trace, &TraceConfig::every)},
      {"trace.clock",
       [](SolverConfig& c, std::string_view v) {
         if (v == "wall") c.trace.clock = ClockMode::wall;
         else if (v == "work") c.trace.clock = ClockMode::work;
         else return false;
         return true;
       }},
      {"hn.max_sweeps", set_number(&SolverConfig::hn, &HNConfig::max_sweeps)},
      {"sa.t0",
       [](SolverConfig& c, std::string_view v) {
         if (v == "auto") {
           c.sa.t0.reset();
           return true;
         }
         const auto t = text::parse_number<double>(v);
         if (!t) return false;
         c.sa.t0 = *t;
         return true;
       }},
      {"sa.tf", set_number(&SolverConfig::sa, &SAConfig::tf)},
      {"sa.sweeps", set_number(&SolverConfig::sa, &SAConfig::sweeps)},
      {"sa.steps",
       [](SolverConfig& c, std::string_view v) {
         if (v == "auto") {
           c.sa.steps.reset();
           return true;
         }
         const auto s = text::parse_number<std::uint64_t>(v);
         if (!s) return false;
         c.sa.steps = *s;
         return true;
       }},
      {"sa.law",
       [](SolverConfig& c, std::string_view v) {
         if (v == "geometric") c.sa.law = CoolingLaw::geometric;
         else if (v == "linear") c.sa.law = CoolingLaw::linear;
         else return false;
         return true;
       }},
      {"htnn.alpha", set_number(&SolverConfig::htnn, &HTNNConfig::alpha)},
      {"htnn.beta", set_number(&SolverConfig::htnn, &HTNNConfig::beta)},
      {"htnn.dt", set_number(&SolverConfig::htnn, &HTNNConfig::dt)},
      {"htnn.max_steps", set_number(&SolverConfig::htnn, &HTNNConfig::max_steps)},
      {"htnn.init_amplitude", set_number(&SolverConfig::htnn, &HTNNConfig::init_amplitude)},
      {"cim.p_start", set_number(&SolverConfig::cim, &CIMConfig::p_start)},
      {"cim.p_end", set_number(&SolverConfig::cim, &CIMConfig::p_end)},
      {"cim.ramp_roundtrips", set_number(&SolverConfig::cim, &CIMConfig::ramp_roundtrips)},
      {"cim.roundtrips", set_number(&SolverConfig::cim, &CIMConfig::roundtrips)},
      {"cim.dt", set_number(&SolverConfig::cim, &CIMConfig::dt)},
      {"cim.saturation", set_number(&SolverConfig::cim, &CIMConfig::saturation)},
      {"cim.t_mes", set_number(&SolverConfig::cim, &CIMConfig::t_mes)},
      {"cim.t_inj", set_number(&SolverConfig::cim, &CIMConfig::t_inj)},
      {"cim.xi", set_number(&SolverConfig::cim, &CIMConfig::xi)},
      {"cim.noise",
       [](SolverConfig& c, std::string_view v) {
         const auto f = parse_flag(v);
         if (f) c.cim.noise = *f;
         return f.has_value();
       }},
      {"cim.two_quadrature",
       [](SolverConfig& c, std::string_view v) {
         const auto f = parse_flag(v);
         if (f) c.cim.two_quadrature = *f;
         return f.has_value();
       }},
      {"cim.quantize_bits", set_number(&SolverConfig::cim, &CIMConfig::quantize_bits)},
      {"cim.quantize_range", set_number(&SolverConfig::cim, &CIMConfig::quantize_range)},
      {"cim.init_variance", set_number(&SolverConfig::cim, &CIMConfig::init_variance)},
  };
  return table;
}

}  // namespace

SolverConfig parse_config(std::string_view input, SolverConfig cfg) {
  text::for_each_line(input, [&](std::size_t line_no, std::string_view raw) {
    const auto hash = raw.find('#');
    const auto line = text::trim(raw.substr(0, hash));
    if (line.empty()) return;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
    const auto key = text::trim(line.substr(0, eq));
    const auto value = text::trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ParseError(line_no, "unknown key \"" + std::string(key) + "\"");
    if (!it->second(cfg, value))
      throw ParseError(line_no, "bad value \"" + std::string(value) + "\" for " + std::string(key));
  });
  return cfg;
}

SolverConfig load_config(const std::string& path, SolverConfig base) {
  return parse_config(text::read_file(path), std::move(base));
}

std::string format_config(const SolverConfig& c) {
  using text::format_number;
  std::string out;
  auto put = [&](std::string_view key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  auto flag = [](bool b) { return std::string(b ? "on" : "off"); };
  put("trace.every", format_number(c.trace.every));
  put("trace.clock", c.trace.clock == ClockMode::wall ? "wall" : "work");
  put("hn.max_sweeps", format_number(c.hn.max_sweeps));
  put("sa.t0", c.sa.t0 ? format_number(*c.sa.t0) : "auto");
  put("sa.tf", format_number(c.sa.tf));
  put("sa.sweeps", format_number(c.sa.sweeps));
  put("sa.steps", c.sa.steps ? format_number(*c.sa.steps) : "auto");
  put("sa.law", c.sa.law == CoolingLaw::geometric ? "geometric" : "linear");
  put("htnn.alpha", format_number(c.htnn.alpha));
  put("htnn.beta", format_number(c.htnn.beta));
  put("htnn.dt", format_number(c.htnn.dt));
  put("htnn.max_steps", format_number(c.htnn.max_steps));
  put("htnn.init_amplitude", format_number(c.htnn.init_amplitude));
  put("cim.p_start", format_number(c.cim.p_start));
  put("cim.p_end", format_number(c.cim.p_end));
  put("cim.ramp_roundtrips", format_number(c.cim.ramp_roundtrips));
  put("cim.roundtrips", format_number(c.cim.roundtrips));
  put("cim.dt", format_number(c.cim.dt));
  put("cim.saturation", format_number(c.cim.saturation));
  put("cim.t_mes", format_number(c.cim.t_mes));
  put("cim.t_inj", format_number(c.cim.t_inj));
  put("cim.xi", format_number(c.cim.xi));
  put("cim.noise", flag(c.cim.noise));
  put("cim.two_quadrature", flag(c.cim.two_quadrature));
  put("cim.quantize_bits", format_number(std::uint64_t{c.cim.quantize_bits}));
  put("cim.quantize_range", format_number(c.cim.quantize_range));
  put("cim.init_variance", format_number(c.cim.init_variance));
  return out;
}

}  // namespace cimbench
