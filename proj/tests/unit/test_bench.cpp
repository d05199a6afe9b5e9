#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cimbench/bench.hpp"
#include "cimbench/csv.hpp"
#include "cimbench/error.hpp"

using namespace cimbench;

namespace {

EnergyTrace make_trace(std::vector<double> energies, std::string solver = "hn",
                       std::size_t trial = 0) {
  EnergyTrace tr;
  tr.solver = std::move(solver);
  tr.trial = trial;
  std::uint64_t k = 0;
  for (double e : energies) {
    ++k;
    tr.samples.push_back({k, 10 * k, e, 0.0});
  }
  return tr;
}

SolverConfig quick_config() {
  SolverConfig cfg;
  cfg.trace.clock = ClockMode::work;
  cfg.sa.sweeps = 40;
  cfg.htnn.max_steps = 60;
  cfg.htnn.beta = 0.5;
  cfg.cim.roundtrips = 60;
  cfg.cim.ramp_roundtrips = 60;
  cfg.cim.xi = 0.05;
  return cfg;
}

// Independent re-aggregation from parsed CSV rows: first row per
// (solver, trial) at or below the target, then min / mean / max.
std::map<std::string, std::vector<std::pair<std::uint64_t, std::uint64_t>>> first_hits(
    const std::vector<EnergyTrace>& traces, double target) {
  std::map<std::string, std::vector<std::pair<std::uint64_t, std::uint64_t>>> hits;
  for (const auto& tr : traces) {
    hits[tr.solver];
    for (const auto& s : tr.samples) {
      if (s.energy <= target) {
        hits[tr.solver].push_back({s.elapsed_ns, s.iteration});
        break;
      }
    }
  }
  return hits;
}

}  // namespace

TEST_CASE("time_to_target") {
  const auto tr = make_trace({-1, -3, -5});
  const auto hit = time_to_target(tr, -4);
  REQUIRE(hit);
  CHECK(hit->iteration == 3);
  CHECK(hit->elapsed_ns == 30);
  CHECK_FALSE(time_to_target(tr, -6));
  CHECK(time_to_target(tr, -3)->iteration == 2);
  CHECK_FALSE(time_to_target(EnergyTrace{}, 0.0));
}

TEST_CASE("aggregate_trials") {
  const std::vector<EnergyTrace> one{make_trace({-1, -3, -5})};
  const auto s = aggregate_trials("hn", one, -4);
  CHECK(s.trials == 1);
  CHECK(s.successes == 1);
  CHECK(*s.best_ns == 30);
  CHECK(*s.avg_ns == 30.0);
  CHECK(*s.worst_ns == 30);
  CHECK(*s.best_iter == 3);

  const std::vector<EnergyTrace> mixed{make_trace({-5}), make_trace({-1, -2, -4, -9}),
                                       make_trace({0, 0})};
  const auto m = aggregate_trials("sa", mixed, -4);
  CHECK(m.trials == 3);
  CHECK(m.successes == 2);
  CHECK(*m.best_ns == 10);
  CHECK(*m.worst_ns == 30);
  CHECK(*m.avg_ns == 20.0);
  CHECK(*m.best_ns <= *m.avg_ns);
  CHECK(*m.avg_ns <= *m.worst_ns);

  const auto none = aggregate_trials("sa", mixed, -100);
  CHECK(none.successes == 0);
  CHECK_FALSE(none.best_ns);
  CHECK_FALSE(none.avg_ns);
}

TEST_CASE("log_time_grid") {
  const auto g = log_time_grid(10, 1000000, 64);
  CHECK(g.front() == 10);
  CHECK(g.back() == 1000000);
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(std::adjacent_find(g.begin(), g.end()) == g.end());
  CHECK(g.size() <= 64);
  CHECK(log_time_grid(5, 5, 64) == std::vector<std::uint64_t>{5});
  CHECK(log_time_grid(1, 3, 64) == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("build_envelope uses step interpolation") {
  const std::vector<EnergyTrace> traces{make_trace({-1, -3, -5}), make_trace({-2, -2, -2})};
  const std::vector<std::uint64_t> grid{5, 10, 15, 20, 30, 100};
  const auto env = build_envelope("hn", traces, grid);
  REQUIRE(env.time_ns.size() == grid.size());
  CHECK(env.best == std::vector<double>{-2, -2, -2, -3, -5, -5});
  CHECK(env.worst == std::vector<double>{-1, -1, -1, -2, -2, -2});
  CHECK(env.mean == std::vector<double>{-1.5, -1.5, -1.5, -2.5, -3.5, -3.5});
}

TEST_CASE("solver ids") {
  CHECK(parse_solver_id("cim") == SolverId::cim);
  CHECK_THROWS_AS(parse_solver_id("tabu"), std::invalid_argument);
  CHECK(parse_solver_list("hn, sa,htnn,cim").size() == 4);
  CHECK_THROWS_AS(parse_solver_list("hn,,sa"), std::invalid_argument);
}

TEST_CASE("run_bench: single trial gives best = average = worst") {
  const auto inst = gen_complete_pm1(30, 1);
  const std::vector<SolverSpec> specs{{SolverId::hn, quick_config()}};
  const auto rep = run_bench(inst, specs, 1, 5, 0.0, {.workers = 1});
  REQUIRE(rep.stats.size() == 1);
  const auto& s = rep.stats[0];
  CHECK(s.successes == 1);
  CHECK(static_cast<double>(*s.best_ns) == *s.avg_ns);
  CHECK(*s.best_ns == *s.worst_ns);
}

TEST_CASE("run_bench: deterministic and independent of the worker count") {
  const auto inst = gen_complete_pm1(40, 2);
  std::vector<SolverSpec> specs;
  for (auto id : {SolverId::hn, SolverId::sa, SolverId::htnn, SolverId::cim})
    specs.push_back({id, quick_config()});
  const auto target = auto_target(inst, quick_config(), 3, 7, 0.9).target;
  const auto a = run_bench(inst, specs, 6, 7, target, {.workers = 1});
  const auto b = run_bench(inst, specs, 6, 7, target, {.workers = 3});
  CHECK(traces_csv(a.traces, 40) == traces_csv(b.traces, 40));
  CHECK(report_csv(a.stats) == report_csv(b.stats));
  CHECK(envelope_csv(a.envelopes, 40) == envelope_csv(b.envelopes, 40));
  CHECK(bench_meta(a) == bench_meta(b));
  CHECK(a.stats.size() == 4);
  for (std::size_t t = 0; t < 6; ++t) CHECK(a.traces[t].seed == derive_seed(7, t));
}

TEST_CASE("run_bench: envelope ordering and trace invariants") {
  const auto inst = gen_complete_pm1(50, 4);
  std::vector<SolverSpec> specs;
  for (auto id : {SolverId::hn, SolverId::sa, SolverId::htnn, SolverId::cim})
    specs.push_back({id, quick_config()});
  const auto rep = run_bench(inst, specs, 8, 1, -100.0, {.workers = 2});
  for (const auto& env : rep.envelopes) {
    REQUIRE(!env.time_ns.empty());
    for (std::size_t k = 0; k < env.time_ns.size(); ++k) {
      CHECK(env.best[k] <= env.mean[k]);
      CHECK(env.mean[k] <= env.worst[k]);
    }
  }
  for (const auto& tr : rep.traces) {
    for (std::size_t k = 0; k < tr.samples.size(); ++k) {
      const auto& s = tr.samples[k];
      CHECK(s.cut * 2 == inst.total_weight() - s.energy);
      if (k == 0) continue;
      CHECK(s.elapsed_ns > tr.samples[k - 1].elapsed_ns);
      CHECK(s.iteration >= tr.samples[k - 1].iteration);
      if (tr.solver == "hn") CHECK(s.energy <= tr.samples[k - 1].energy);
    }
  }
}

TEST_CASE("run_bench argument errors") {
  const auto inst = gen_complete_pm1(10, 1);
  const std::vector<SolverSpec> specs{{SolverId::hn, {}}};
  CHECK_THROWS_AS(run_bench(inst, specs, 0, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(run_bench(inst, {}, 1, 1, 0.0), std::invalid_argument);
  SolverConfig bad;
  bad.cim.t_mes = 2.0;
  const std::vector<SolverSpec> bad_specs{{SolverId::cim, bad}};
  CHECK_THROWS_AS(run_bench(inst, bad_specs, 2, 1, 0.0, {.workers = 2}), std::invalid_argument);
}

TEST_CASE("csv: empty trace set is header only") {
  CHECK(traces_csv({}, 10) == "solver,trial,iteration,elapsed_ns,energy,energy_per_spin,cut\n");
  CHECK(report_csv({}) ==
        "solver,trials,successes,best_ns,avg_ns,worst_ns,best_iter,avg_iter,worst_iter\n");
}

TEST_CASE("csv: single-sample trace") {
  const auto inst = gen_complete_pm1(10, 1);
  auto cfg = quick_config();
  cfg.hn.max_sweeps = 0;
  const auto out = run_trial(SolverId::hn, inst, cfg, 3);
  const std::vector<EnergyTrace> one{out.trace};
  const auto csv = traces_csv(one, 10);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  const auto back = parse_traces_csv(csv);
  REQUIRE(back.size() == 1);
  REQUIRE(back[0].samples.size() == 1);
  CHECK(back[0].samples[0].elapsed_ns > 0);
}

TEST_CASE("csv: report with a failed solver has empty statistics") {
  SolverStats s;
  s.solver = "hn";
  s.trials = 3;
  CHECK(report_csv(std::vector{s}).ends_with("\nhn,3,0,,,,,,\n"));
}

TEST_CASE("csv: re-aggregating emitted traces reproduces the report") {
  const auto inst = gen_complete_pm1(60, 9);
  std::vector<SolverSpec> specs;
  for (auto id : {SolverId::hn, SolverId::sa, SolverId::htnn, SolverId::cim})
    specs.push_back({id, quick_config()});
  const double target = auto_target(inst, quick_config(), 2, 3, 0.95).target;
  const auto rep = run_bench(inst, specs, 10, 3, target, {.workers = 2});

  const auto parsed = parse_traces_csv(traces_csv(rep.traces, 60));
  REQUIRE(parsed.size() == rep.traces.size());
  for (std::size_t k = 0; k < parsed.size(); ++k) CHECK(parsed[k].samples == rep.traces[k].samples);

  const auto hits = first_hits(parsed, target);
  for (const auto& s : rep.stats) {
    const auto& h = hits.at(s.solver);
    CHECK(s.successes == h.size());
    if (h.empty()) continue;
    std::uint64_t lo = UINT64_MAX, hi = 0, ilo = UINT64_MAX, ihi = 0, sum = 0, isum = 0;
    for (auto [ns, it] : h) {
      lo = std::min(lo, ns);
      hi = std::max(hi, ns);
      ilo = std::min(ilo, it);
      ihi = std::max(ihi, it);
      sum += ns;
      isum += it;
    }
    CHECK(*s.best_ns == lo);
    CHECK(*s.worst_ns == hi);
    CHECK(*s.best_iter == ilo);
    CHECK(*s.worst_iter == ihi);
    CHECK(*s.avg_ns == static_cast<double>(sum) / static_cast<double>(h.size()));
    CHECK(*s.avg_iter == static_cast<double>(isum) / static_cast<double>(h.size()));
  }
  // Same numbers through the library aggregator on parsed traces.
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const std::span<const EnergyTrace> group(parsed.data() + s * 10, 10);
    auto again = aggregate_trials(rep.stats[s].solver, group, target);
    again.mean_trace_crossing_ns = rep.stats[s].mean_trace_crossing_ns;
    CHECK(again == rep.stats[s]);
  }
}

TEST_CASE("csv: malformed trace rows are rejected") {
  CHECK_THROWS_AS(parse_traces_csv("nope\n"), ParseError);
  CHECK_THROWS_AS(
      parse_traces_csv("solver,trial,iteration,elapsed_ns,energy,energy_per_spin,cut\nhn,0,1\n"),
      ParseError);
}

TEST_CASE("config: parse, defaults and round trip") {
  const auto cfg = parse_config(
      "# comment\n"
      "sa.t0 = 3.5\n"
      "sa.law = linear   # trailing comment\n"
      "cim.noise = off\n"
      "cim.quantize_bits = 5\n"
      "htnn.alpha = 4\n"
      "trace.clock = work\n");
  CHECK(*cfg.sa.t0 == 3.5);
  CHECK(cfg.sa.law == CoolingLaw::linear);
  CHECK_FALSE(cfg.cim.noise);
  CHECK(cfg.cim.quantize_bits == 5);
  CHECK(cfg.htnn.alpha == 4.0);
  CHECK(cfg.htnn.beta == 0.1);
  CHECK(cfg.trace.clock == ClockMode::work);
  CHECK(format_config(parse_config(format_config(cfg))) == format_config(cfg));
  CHECK(format_config(parse_config("")) == format_config(SolverConfig{}));
}

TEST_CASE("config: errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      parse_config(text);
    } catch (const ParseError& e) {
      return static_cast<int>(e.line());
    }
    return -1;
  };
  CHECK(line_of("sa.tf = 0.1\nsa.bogus = 1") == 2);
  CHECK(line_of("sa.tf = zero") == 1);
  CHECK(line_of("\n\nhn.max_sweeps") == 3);
  CHECK(line_of("cim.noise = maybe") == 1);
  CHECK(line_of("trace.clock = sundial") == 1);
}
