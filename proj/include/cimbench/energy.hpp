#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cimbench/instance.hpp"

namespace cimbench {

class RandomStream;

// Packs +-1 spins into 64-bit words; bit k is set iff spins[k] > 0.
std::vector<std::uint64_t> pack_spins(std::span<const int> spins);

// Local fields h_i = sum_j J_ij x_j recomputed from scratch.
std::vector<double> compute_fields(const IsingInstance& inst,
                                   std::span<const std::uint64_t> bits);

/// +-1 spin assignment with cached local fields h_i = sum_j J_ij x_j.
///
/// Fields are doubles. For integer-weight instances every cached value is
/// an integer well inside 2^53, so the incremental updates are exact.
class SpinState {
 public:
  SpinState() = default;

  static SpinState from_spins(const IsingInstance& inst, std::span<const int> spins);
  static SpinState from_bits(const IsingInstance& inst, std::vector<std::uint64_t> bits);
  static SpinState uniform(const IsingInstance& inst, int spin);
  static SpinState random(const IsingInstance& inst, RandomStream& rng);

  std::size_t size() const noexcept { return n_; }
  int spin(std::size_t i) const noexcept {
    return ((bits_[i / 64] >> (i % 64)) & 1U) ? 1 : -1;
  }
  double field(std::size_t i) const noexcept { return fields_[i]; }
  std::span<const std::uint64_t> bits() const noexcept { return bits_; }
  std::span<const double> fields() const noexcept { return fields_; }
  std::vector<int> spins() const;

  friend bool operator==(const SpinState&, const SpinState&) = default;

 private:
  friend void apply_flip(const IsingInstance&, SpinState&, std::size_t);

  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<double> fields_;
};

struct Energy {
  double value = 0.0;
  double per_spin = 0.0;
  friend bool operator==(const Energy&, const Energy&) = default;
};

// E(x) = sum_{i<j} w_ij x_i x_j, summed edge by edge (never from the cache).
Energy ising_energy(const IsingInstance& inst, std::span<const std::uint64_t> bits);
Energy ising_energy(const IsingInstance& inst, const SpinState& x);

// CUT(x) = sum_{i<j} w_ij (1 - x_i x_j) / 2, summed edge by edge.
double cut_value(const IsingInstance& inst, const SpinState& x);

// Energy change of flipping spin i, 2 x_i h_i, from the cached field.
double delta_energy(const IsingInstance& inst, const SpinState& x, std::size_t i);

/// Same quantity from the sign bitplanes, without the field cache.
///
/// With m = edge_mask row i, s = sign_plane row i and b = spin bits:
///   agree = popcount(m & ~(s ^ b))   neighbours with J_ij x_j = +1
///   deg   = popcount(m)
///   h_i   = 2 * agree - deg
/// because J_ij = +1 exactly where s is set and x_j = +1 where b is set,
/// so J_ij x_j = +1 iff the two bits agree. Padding bits of m are zero.
/// Throws std::logic_error when the instance has no bitplanes.
std::int64_t delta_energy_packed(const IsingInstance& inst, const SpinState& x,
                                 std::size_t i);

// Toggles spin i and updates every neighbour field by 2 J_ij x_i(new).
void apply_flip(const IsingInstance& inst, SpinState& x, std::size_t i);

}  // namespace cimbench
