#include "cimbench/csv.hpp"

#include "cimbench/error.hpp"
#include "text.hpp"

namespace cimbench {

using text::format_number;

namespace {

constexpr std::string_view kTraceHeader =
    "solver,trial,iteration,elapsed_ns,energy,energy_per_spin,cut";

template <class T>
std::string opt(const std::optional<T>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

std::string traces_csv(std::span<const EnergyTrace> traces, std::size_t n) {
  std::string out(kTraceHeader);
  out += '\n';
  const double dn = static_cast<double>(n);
  for (const auto& tr : traces) {
    const std::string prefix = tr.solver + "," + format_number(std::uint64_t{tr.trial}) + ",";
    for (const auto& s : tr.samples) {
      out += prefix;
      out += format_number(s.iteration);
      out += ',';
      out += format_number(s.elapsed_ns);
      out += ',';
      out += format_number(s.energy);
      out += ',';
      out += format_number(s.energy / dn);
      out += ',';
      out += format_number(s.cut);
      out += '\n';
    }
  }
  return out;
}

std::string report_csv(std::span<const SolverStats> stats) {
  std::string out = "solver,trials,successes,best_ns,avg_ns,worst_ns,best_iter,avg_iter,worst_iter\n";
  for (const auto& s : stats) {
    out += s.solver;
    for (const auto& field :
         {format_number(std::uint64_t{s.trials}), format_number(std::uint64_t{s.successes}),
          opt(s.best_ns), opt(s.avg_ns), opt(s.worst_ns), opt(s.best_iter), opt(s.avg_iter),
          opt(s.worst_iter)}) {
      out += ',';
      out += field;
    }
    out += '\n';
  }
  return out;
}

std::string envelope_csv(std::span<const Envelope> envelopes, std::size_t n) {
  std::string out =
      "solver,time_ns,best_energy,mean_energy,worst_energy,best_per_spin,mean_per_spin,"
      "worst_per_spin\n";
  const double dn = static_cast<double>(n);
  for (const auto& e : envelopes) {
    for (std::size_t k = 0; k < e.time_ns.size(); ++k) {
      out += e.solver;
      for (const auto& field :
           {format_number(e.time_ns[k]), format_number(e.best[k]), format_number(e.mean[k]),
            format_number(e.worst[k]), format_number(e.best[k] / dn),
            format_number(e.mean[k] / dn), format_number(e.worst[k] / dn)}) {
        out += ',';
        out += field;
      }
      out += '\n';
    }
  }
  return out;
}

std::string bench_meta(const BenchReport& rep) {
  std::string out;
  auto put = [&](const std::string& key, const std::string& value) {
    out += key + " = " + value + "\n";
  };
  put("n", format_number(std::uint64_t{rep.n}));
  put("master_seed", format_number(rep.master_seed));
  put("target", format_number(rep.target));
  put("target_per_spin", format_number(rep.target / static_cast<double>(rep.n)));
  put("clock", rep.clock == ClockMode::wall ? "wall" : "work");
  put("timing_scope", rep.clock == ClockMode::wall
                          ? "solver loop only; excludes instance load and CSV output"
                          : "elementary updates (one per spin attempt, neuron or pulse)");
  for (const auto& s : rep.stats) {
    put("mean_first_hit_ns." + s.solver, opt(s.avg_ns));
    put("mean_trace_crossing_ns." + s.solver, opt(s.mean_trace_crossing_ns));
  }
  return out;
}

std::vector<EnergyTrace> parse_traces_csv(std::string_view csv) {
  std::vector<EnergyTrace> out;
  bool header = false;
  text::for_each_line(csv, [&](std::size_t line_no, std::string_view line) {
    if (line.empty()) return;
    if (!header) {
      if (line != kTraceHeader) throw ParseError(line_no, "unexpected trace CSV header");
      header = true;
      return;
    }
    const auto f = text::split(line, ',');
    if (f.size() != 7) throw ParseError(line_no, "expected 7 fields");
    const auto trial = text::parse_number<std::size_t>(f[1]);
    const auto iter = text::parse_number<std::uint64_t>(f[2]);
    const auto ns = text::parse_number<std::uint64_t>(f[3]);
    const auto energy = text::parse_number<double>(f[4]);
    const auto cut = text::parse_number<double>(f[6]);
    if (!trial || !iter || !ns || !energy || !cut) throw ParseError(line_no, "malformed row");
    if (out.empty() || out.back().solver != f[0] || out.back().trial != *trial) {
      EnergyTrace tr;
      tr.solver = std::string(f[0]);
      tr.trial = *trial;
      out.push_back(std::move(tr));
    }
    out.back().samples.push_back({*iter, *ns, *energy, *cut});
  });
  if (!header) throw ParseError(0, "missing trace CSV header");
  return out;
}

}  // namespace cimbench
