#pragma once

#include <cstdint>
#include <random>

namespace cimbench {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used to whiten seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed of stream `index` under `master`:
//   splitmix64(splitmix64(master) ^ splitmix64(index + 0x9e3779b97f4a7c15)).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Deterministic random stream backed by std::mt19937_64.
///
/// The engine itself is fully specified by the standard. The conversions to
/// uniform reals, bounded integers and normals are done here rather than
/// with the <random> distributions, whose algorithms are implementation
/// defined, so a seed reproduces the same numbers on every toolchain.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer on [0, bound), bound > 0. Lemire's multiply-shift with
  // rejection, so there is no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  // Standard normal via Box-Muller; the second variate is cached.
  double normal();

  // Fair coin.
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace cimbench
