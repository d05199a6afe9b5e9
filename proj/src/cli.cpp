#include "cimbench/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>

#include "cimbench/bench.hpp"
#include "cimbench/csv.hpp"
#include "cimbench/instance.hpp"
#include "text.hpp"

namespace cimbench {

namespace {

struct Options {
  // gen
  std::size_t n = 0;
  std::string out_path;
  // shared
  std::uint64_t seed = 1;
  std::string instance;
  std::string config;
  std::string clock;
  // solve
  std::string solver;
  std::string trace;
  // bench
  std::string solvers = "hn,sa,htnn,cim";
  std::size_t trials = 100;
  std::string target;
  std::string out_dir;
  std::size_t auto_runs = 10;
  double target_depth = 0.98;
  std::size_t grid_points = 64;
  std::size_t workers = 0;
};

SolverConfig load_solver_config(const Options& o) {
  SolverConfig cfg = o.config.empty() ? SolverConfig{} : load_config(o.config);
  if (o.clock == "work") cfg.trace.clock = ClockMode::work;
  else if (o.clock == "wall") cfg.trace.clock = ClockMode::wall;
  return cfg;
}

int run_gen(const Options& o, std::ostream& out) {
  const auto inst = gen_complete_pm1(o.n, o.seed);
  save_edge_list(inst, o.out_path);
  out << "wrote " << o.out_path << ": n=" << inst.size() << " m=" << inst.edge_count()
      << " W=" << text::format_number(inst.total_weight()) << '\n';
  return 0;
}

int run_solve(const Options& o, std::ostream& out) {
  const auto id = parse_solver_id(o.solver);
  const auto cfg = load_solver_config(o);
  const auto inst = read_edge_list(o.instance);
  auto result = run_trial(id, inst, cfg, o.seed);
  if (!o.trace.empty()) {
    std::vector<EnergyTrace> one{result.trace};
    text::write_file(o.trace, traces_csv(one, inst.size()));
  }
  const auto& last = result.trace.samples.back();
  out << "solver = " << solver_name(id) << '\n'
      << "energy = " << text::format_number(result.final_energy.value) << '\n'
      << "energy_per_spin = " << text::format_number(result.final_energy.per_spin) << '\n'
      << "cut = " << text::format_number(cut_value(inst, result.final_state)) << '\n'
      << "iterations = " << result.sweeps << '\n'
      << "converged = " << (result.converged ? "yes" : "no") << '\n'
      << "elapsed_ns = " << last.elapsed_ns << '\n';
  return 0;
}

int run_bench_cmd(const Options& o, std::ostream& out) {
  const auto ids = parse_solver_list(o.solvers);
  const auto cfg = load_solver_config(o);
  const auto inst = read_edge_list(o.instance);

  double target = 0.0;
  std::string target_source;
  if (o.target == "auto") {
    const auto at = auto_target(inst, cfg, o.auto_runs, o.seed, o.target_depth);
    target = at.target;
    target_source = "auto: " + text::format_number(o.target_depth) + " x best of " +
                    std::to_string(o.auto_runs) + " SA runs (" +
                    text::format_number(at.best_energy) + ")";
  } else {
    const auto t = text::parse_number<double>(o.target);
    if (!t) throw CLI::ValidationError("--target", "expected a number or 'auto'");
    target = *t;
    target_source = "explicit";
  }

  std::vector<SolverSpec> specs;
  for (auto id : ids) specs.push_back({id, cfg});
  BenchOptions opts;
  opts.workers = o.workers;
  opts.grid_points = o.grid_points;
  const auto rep = run_bench(inst, specs, o.trials, o.seed, target, opts);

  namespace fs = std::filesystem;
  fs::create_directories(o.out_dir);
  const fs::path dir(o.out_dir);
  text::write_file((dir / "traces.csv").string(), traces_csv(rep.traces, inst.size()));
  text::write_file((dir / "report.csv").string(), report_csv(rep.stats));
  text::write_file((dir / "envelope.csv").string(), envelope_csv(rep.envelopes, inst.size()));
  text::write_file((dir / "meta.txt").string(),
                   bench_meta(rep) + "target_source = " + target_source + "\n");
  text::write_file((dir / "config.txt").string(), format_config(cfg));

  out << "target = " << text::format_number(target) << " (" << target_source << ")\n";
  out << report_csv(rep.stats);
  return 0;
}

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ising / MAX-CUT heuristic solvers and time-to-target benchmark", "cimbench"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a complete graph with +-1 weights");
  gen->add_option("--n", o.n, "vertex count")->required()->check(CLI::Range(2, 1 << 20));
  gen->add_option("--seed", o.seed, "generator seed");
  gen->add_option("--out", o.out_path, "output edge-list file")->required();

  const auto clock_check = CLI::IsMember({"wall", "work"});
  auto* solve = app.add_subcommand("solve", "run one trial of one solver");
  solve->add_option("--solver", o.solver, "hn, sa, htnn or cim")->required();
  solve->add_option("--instance", o.instance, "edge-list file")->required();
  solve->add_option("--seed", o.seed, "trial seed");
  solve->add_option("--config", o.config, "key = value solver config file");
  solve->add_option("--trace", o.trace, "write the energy trace CSV here");
  solve->add_option("--clock", o.clock, "timestamp source")->check(clock_check);

  auto* bench = app.add_subcommand("bench", "multi-trial time-to-target benchmark");
  bench->add_option("--instance", o.instance, "edge-list file")->required();
  bench->add_option("--solvers", o.solvers, "comma-separated solver list")
      ->capture_default_str();
  bench->add_option("--trials", o.trials, "trials per solver")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed, "master seed");
  bench->add_option("--target", o.target, "target energy, or 'auto'")->required();
  bench->add_option("--out-dir", o.out_dir, "output directory")->required();
  bench->add_option("--config", o.config, "key = value solver config file");
  bench->add_option("--clock", o.clock, "timestamp source")->check(clock_check);
  bench->add_option("--auto-runs", o.auto_runs, "preliminary SA runs for --target auto")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--target-depth", o.target_depth,
                    "--target auto uses depth x best SA energy")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--grid-points", o.grid_points, "envelope grid size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--workers", o.workers, "worker threads (0: CIMBENCH_WORKERS or cores)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) return run_gen(o, out);
    if (solve->parsed()) return run_solve(o, out);
    return run_bench_cmd(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cimbench
