#include "cimbench/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

#include "cimbench/analog.hpp"
#include "cimbench/cim.hpp"
#include "cimbench/discrete.hpp"
#include "text.hpp"

namespace cimbench {

std::string_view solver_name(SolverId id) {
  switch (id) {
    case SolverId::hn: return "hn";
    case SolverId::sa: return "sa";
    case SolverId::htnn: return "htnn";
    case SolverId::cim: return "cim";
  }
  return "?";
}

SolverId parse_solver_id(std::string_view name) {
  for (auto id : {SolverId::hn, SolverId::sa, SolverId::htnn, SolverId::cim}) {
    if (solver_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown solver \"" + std::string(name) +
                              "\" (expected hn, sa, htnn or cim)");
}

std::vector<SolverId> parse_solver_list(std::string_view list) {
  std::vector<SolverId> out;
  for (auto tok : text::split(list, ',')) out.push_back(parse_solver_id(text::trim(tok)));
  return out;
}

TrialOutcome run_trial(SolverId id, const IsingInstance& inst, const SolverConfig& cfg,
                       std::uint64_t seed) {
  RandomStream rng(seed);
  TrialOutcome out;
  switch (id) {
    case SolverId::hn:
      out = hn_solve(inst, SpinState::random(inst, rng), cfg.hn, cfg.trace);
      break;
    case SolverId::sa: {
      auto x0 = SpinState::random(inst, rng);
      const auto sched = make_schedule(inst, x0, cfg.sa);
      out = sa_solve(inst, std::move(x0), sched, rng, cfg.trace);
      break;
    }
    case SolverId::htnn:
      cfg.htnn.validate();
      out = htnn_solve(inst, random_analog_state(inst.size(), cfg.htnn.init_amplitude, rng),
                       cfg.htnn, cfg.trace);
      break;
    case SolverId::cim:
      out = cim_solve(inst, cfg.cim, rng, cfg.trace);
      break;
  }
  out.trace.seed = seed;
  return out;
}

SolverStats aggregate_trials(std::string solver, std::span<const EnergyTrace> traces,
                             double target) {
  SolverStats st;
  st.solver = std::move(solver);
  st.trials = traces.size();
  std::uint64_t sum_ns = 0;
  std::uint64_t sum_iter = 0;
  for (const auto& tr : traces) {
    const auto hit = time_to_target(tr, target);
    if (!hit) continue;
    ++st.successes;
    sum_ns += hit->elapsed_ns;
    sum_iter += hit->iteration;
    st.best_ns = std::min(st.best_ns.value_or(hit->elapsed_ns), hit->elapsed_ns);
    st.worst_ns = std::max(st.worst_ns.value_or(hit->elapsed_ns), hit->elapsed_ns);
    st.best_iter = std::min(st.best_iter.value_or(hit->iteration), hit->iteration);
    st.worst_iter = std::max(st.worst_iter.value_or(hit->iteration), hit->iteration);
  }
  if (st.successes > 0) {
    const auto k = static_cast<double>(st.successes);
    st.avg_ns = static_cast<double>(sum_ns) / k;
    st.avg_iter = static_cast<double>(sum_iter) / k;
  }
  return st;
}

std::vector<std::uint64_t> log_time_grid(std::uint64_t first, std::uint64_t last,
                                         std::size_t points) {
  first = std::max<std::uint64_t>(first, 1);
  last = std::max(last, first);
  std::vector<std::uint64_t> grid;
  if (points <= 1 || first == last) {
    grid.push_back(last);
    return grid;
  }
  const double ratio = std::log(static_cast<double>(last) / static_cast<double>(first));
  for (std::size_t k = 0; k < points; ++k) {
    std::uint64_t t = last;
    if (k + 1 < points) {
      const double frac = static_cast<double>(k) / static_cast<double>(points - 1);
      t = static_cast<std::uint64_t>(
          std::llround(static_cast<double>(first) * std::exp(ratio * frac)));
      t = std::clamp(t, first, last);
    }
    if (grid.empty() || t > grid.back()) grid.push_back(t);
  }
  return grid;
}

Envelope build_envelope(std::string solver, std::span<const EnergyTrace> traces,
                        std::span<const std::uint64_t> grid) {
  Envelope env;
  env.solver = std::move(solver);
  env.time_ns.assign(grid.begin(), grid.end());
  std::vector<std::size_t> cursor(traces.size(), 0);
  for (const auto t : grid) {
    double best = 0.0;
    double worst = 0.0;
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < traces.size(); ++k) {
      const auto& s = traces[k].samples;
      if (s.empty()) continue;
      auto& c = cursor[k];
      while (c + 1 < s.size() && s[c + 1].elapsed_ns <= t) ++c;
      const double e = s[c].energy;
      best = count ? std::min(best, e) : e;
      worst = count ? std::max(worst, e) : e;
      sum += e;
      ++count;
    }
    if (count == 0) continue;
    env.best.push_back(best);
    env.worst.push_back(worst);
    env.mean.push_back(std::clamp(sum / static_cast<double>(count), best, worst));
  }
  if (env.best.size() != env.time_ns.size()) env.time_ns.clear();
  return env;
}

std::size_t default_worker_count() {
  if (const char* v = std::getenv("CIMBENCH_WORKERS")) {
    if (const auto k = text::parse_number<std::size_t>(v); k && *k > 0) return *k;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

BenchReport run_bench(const IsingInstance& inst, std::span<const SolverSpec> solvers,
                      std::size_t trials, std::uint64_t master_seed, double target,
                      const BenchOptions& opts) {
  if (trials < 1) throw std::invalid_argument("bench needs at least one trial");
  if (solvers.empty()) throw std::invalid_argument("bench needs at least one solver");

  const std::size_t jobs = solvers.size() * trials;
  std::vector<EnergyTrace> traces(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const auto& spec = solvers[job / trials];
      const std::size_t trial = job % trials;
      try {
        auto out = run_trial(spec.id, inst, spec.config, derive_seed(master_seed, trial));
        out.trace.trial = trial;
        traces[job] = std::move(out.trace);
      } catch (...) {
        errors[job] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::min(jobs, opts.workers ? opts.workers : default_worker_count());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  BenchReport rep;
  rep.n = inst.size();
  rep.target = target;
  rep.master_seed = master_seed;
  rep.clock = solvers.front().config.trace.clock;

  std::uint64_t first = UINT64_MAX;
  std::uint64_t last = 0;
  for (const auto& tr : traces) {
    if (tr.samples.empty()) continue;
    first = std::min(first, tr.samples.front().elapsed_ns);
    last = std::max(last, tr.samples.back().elapsed_ns);
  }
  const auto grid = log_time_grid(first == UINT64_MAX ? 1 : first, last, opts.grid_points);

  for (std::size_t s = 0; s < solvers.size(); ++s) {
    const std::span<const EnergyTrace> group(traces.data() + s * trials, trials);
    const std::string name(solver_name(solvers[s].id));
    auto stats = aggregate_trials(name, group, target);
    auto env = build_envelope(name, group, grid);
    for (std::size_t k = 0; k < env.time_ns.size(); ++k) {
      if (env.mean[k] <= target) {
        stats.mean_trace_crossing_ns = env.time_ns[k];
        break;
      }
    }
    rep.stats.push_back(std::move(stats));
    rep.envelopes.push_back(std::move(env));
  }
  rep.traces = std::move(traces);
  return rep;
}

AutoTarget auto_target(const IsingInstance& inst, const SolverConfig& cfg, std::size_t runs,
                       std::uint64_t master_seed, double depth) {
  if (runs < 1) throw std::invalid_argument("auto target needs at least one SA run");
  if (!(depth > 0.0)) throw std::invalid_argument("auto target depth must be positive");
  const std::uint64_t base = derive_seed(master_seed, 0xa070);
  AutoTarget at;
  for (std::size_t k = 0; k < runs; ++k) {
    const auto out = run_trial(SolverId::sa, inst, cfg, derive_seed(base, k));
    double e = out.final_energy.value;
    for (const auto& s : out.trace.samples) e = std::min(e, s.energy);
    at.best_energy = k == 0 ? e : std::min(at.best_energy, e);
  }
  at.best_energy = std::min(at.best_energy, 0.0);
  at.target = depth * at.best_energy;
  return at;
}

}  // namespace cimbench
