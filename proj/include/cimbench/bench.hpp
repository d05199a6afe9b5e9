#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cimbench/config.hpp"
#include "cimbench/trace.hpp"

namespace cimbench {

enum class SolverId { hn, sa, htnn, cim };

std::string_view solver_name(SolverId id);
// Throws std::invalid_argument for anything but hn, sa, htnn, cim.
SolverId parse_solver_id(std::string_view name);
// Comma-separated list, e.g. "hn,sa,htnn,cim".
std::vector<SolverId> parse_solver_list(std::string_view list);

/// One trial of one solver. RandomStream(seed) first draws the start state
/// (uniform +-1 spins for hn/sa, uniform activations for htnn, normal
/// amplitudes for cim) and then feeds the solver's own randomness.
TrialOutcome run_trial(SolverId id, const IsingInstance& inst, const SolverConfig& cfg,
                       std::uint64_t seed);

struct SolverSpec {
  SolverId id = SolverId::hn;
  SolverConfig config;
};

// Time-to-target statistics over the trials that reached the target.
// Unset optionals mean no trial succeeded.
struct SolverStats {
  std::string solver;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::optional<std::uint64_t> best_ns;
  std::optional<double> avg_ns;
  std::optional<std::uint64_t> worst_ns;
  std::optional<std::uint64_t> best_iter;
  std::optional<double> avg_iter;
  std::optional<std::uint64_t> worst_iter;
  // First grid time at which the ensemble-mean envelope is <= target. Not
  // the same thing as avg_ns, which averages per-trial first hits.
  std::optional<std::uint64_t> mean_trace_crossing_ns;
  friend bool operator==(const SolverStats&, const SolverStats&) = default;
};

// Pointwise best / mean / worst energy over trials on a time grid.
struct Envelope {
  std::string solver;
  std::vector<std::uint64_t> time_ns;
  std::vector<double> best;
  std::vector<double> mean;
  std::vector<double> worst;
};

struct BenchReport {
  std::size_t n = 0;
  double target = 0.0;
  std::uint64_t master_seed = 0;
  ClockMode clock = ClockMode::wall;
  std::vector<SolverStats> stats;
  std::vector<Envelope> envelopes;
  // Trial order within each solver, solvers in request order.
  std::vector<EnergyTrace> traces;
};

// Pure function of the traces; mean_trace_crossing_ns is left unset.
SolverStats aggregate_trials(std::string solver, std::span<const EnergyTrace> traces,
                             double target);

// Up to `points` integer times, log-spaced from `first` to `last` inclusive,
// strictly increasing.
std::vector<std::uint64_t> log_time_grid(std::uint64_t first, std::uint64_t last,
                                         std::size_t points);

/// Step interpolation: a trace's value at time t is the energy of its last
/// sample with elapsed_ns <= t; before its first sample the first sample's
/// energy is used. The mean is clamped into [best, worst].
Envelope build_envelope(std::string solver, std::span<const EnergyTrace> traces,
                        std::span<const std::uint64_t> grid);

struct BenchOptions {
  std::size_t workers = 0;  // 0: CIMBENCH_WORKERS or hardware concurrency
  std::size_t grid_points = 64;
};

// Worker count from the CIMBENCH_WORKERS environment variable, falling back
// to std::thread::hardware_concurrency().
std::size_t default_worker_count();

/// Runs `trials` trials per solver. Trial t of every solver uses seed
/// derive_seed(master_seed, t). Trials are spread over a worker pool and
/// collected in trial order, so the report does not depend on scheduling
/// (timestamps aside, under ClockMode::wall).
BenchReport run_bench(const IsingInstance& inst, std::span<const SolverSpec> solvers,
                      std::size_t trials, std::uint64_t master_seed, double target,
                      const BenchOptions& opts = {});

struct AutoTarget {
  double best_energy = 0.0;
  double target = 0.0;
};

/// Reference target from `runs` preliminary SA trials (seeds derived from
/// derive_seed(master_seed, 0xa070)): target = depth * best final energy,
/// best <= 0 always holds.
AutoTarget auto_target(const IsingInstance& inst, const SolverConfig& cfg, std::size_t runs,
                       std::uint64_t master_seed, double depth);

}  // namespace cimbench
