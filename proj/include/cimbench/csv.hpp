#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cimbench/bench.hpp"

namespace cimbench {

// All writers use '.' as decimal point, shortest round-trip numbers, LF line
// endings and a trailing LF after every row including the header.

// solver,trial,iteration,elapsed_ns,energy,energy_per_spin,cut
std::string traces_csv(std::span<const EnergyTrace> traces, std::size_t n);

// solver,trials,successes,best_ns,avg_ns,worst_ns,best_iter,avg_iter,worst_iter
// Statistics are empty fields when a solver never reached the target.
std::string report_csv(std::span<const SolverStats> stats);

// solver,time_ns,best_energy,mean_energy,worst_energy,best_per_spin,mean_per_spin,worst_per_spin
std::string envelope_csv(std::span<const Envelope> envelopes, std::size_t n);

// Run metadata as "key = value" lines: target, clock, timing scope and the
// two distinct ensemble-average times per solver.
std::string bench_meta(const BenchReport& report);

// Reads traces_csv output back. Consecutive rows with the same
// (solver, trial) form one trace; seeds are not stored and read back as 0.
// Throws ParseError on a malformed row.
std::vector<EnergyTrace> parse_traces_csv(std::string_view csv);

}  // namespace cimbench
