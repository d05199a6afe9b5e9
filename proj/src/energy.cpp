#include "cimbench/energy.hpp"

#include <bit>
#include <stdexcept>

#include "cimbench/random.hpp"

namespace cimbench {

namespace {

void check_size(const IsingInstance& inst, std::size_t n) {
  if (inst.size() != n)
    throw std::invalid_argument("state size " + std::to_string(n) +
                                " does not match instance size " +
                                std::to_string(inst.size()));
}

void check_index(const SpinState& x, std::size_t i) {
  if (i >= x.size()) throw std::out_of_range("spin index out of range");
}

int bit_spin(std::span<const std::uint64_t> bits, std::size_t i) {
  return ((bits[i / 64] >> (i % 64)) & 1U) ? 1 : -1;
}

}  // namespace

std::vector<std::uint64_t> pack_spins(std::span<const int> spins) {
  std::vector<std::uint64_t> bits((spins.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < spins.size(); ++i) {
    if (spins[i] != 1 && spins[i] != -1)
      throw std::invalid_argument("spins must be +1 or -1");
    if (spins[i] > 0) bits[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return bits;
}

std::vector<double> compute_fields(const IsingInstance& inst,
                                   std::span<const std::uint64_t> bits) {
  const std::size_t n = inst.size();
  if (bits.size() != (n + 63) / 64) throw std::invalid_argument("bit vector size mismatch");
  std::vector<double> h(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    inst.for_each_neighbor(i, [&](std::size_t j, auto w) {
      acc -= static_cast<double>(w) * bit_spin(bits, j);
    });
    h[i] = acc;
  }
  return h;
}

SpinState SpinState::from_bits(const IsingInstance& inst,
                               std::vector<std::uint64_t> bits) {
  const std::size_t n = inst.size();
  if (bits.size() != (n + 63) / 64) throw std::invalid_argument("bit vector size mismatch");
  if (n % 64 != 0 && !bits.empty()) bits.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  SpinState s;
  s.n_ = n;
  s.fields_ = compute_fields(inst, bits);
  s.bits_ = std::move(bits);
  return s;
}

SpinState SpinState::from_spins(const IsingInstance& inst, std::span<const int> spins) {
  check_size(inst, spins.size());
  return from_bits(inst, pack_spins(spins));
}

SpinState SpinState::uniform(const IsingInstance& inst, int spin) {
  std::vector<int> spins(inst.size(), spin);
  return from_spins(inst, spins);
}

SpinState SpinState::random(const IsingInstance& inst, RandomStream& rng) {
  std::vector<int> spins(inst.size());
  for (auto& s : spins) s = rng.coin() ? 1 : -1;
  return from_spins(inst, spins);
}

std::vector<int> SpinState::spins() const {
  std::vector<int> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = spin(i);
  return out;
}

Energy ising_energy(const IsingInstance& inst, std::span<const std::uint64_t> bits) {
  const std::size_t n = inst.size();
  if (bits.size() != (n + 63) / 64) throw std::invalid_argument("bit vector size mismatch");
  double value = 0.0;
  if (inst.weight_class() == WeightClass::unit) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int xi = bit_spin(bits, i);
      inst.for_each_neighbor(i, [&](std::size_t j, auto w) {
        if (j > i) acc += static_cast<std::int64_t>(w) * xi * bit_spin(bits, j);
      });
    }
    value = static_cast<double>(acc);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const int xi = bit_spin(bits, i);
      inst.for_each_neighbor(i, [&](std::size_t j, auto w) {
        if (j > i) value += static_cast<double>(w) * (xi * bit_spin(bits, j));
      });
    }
  }
  return {value, value / static_cast<double>(n)};
}

Energy ising_energy(const IsingInstance& inst, const SpinState& x) {
  check_size(inst, x.size());
  return ising_energy(inst, x.bits());
}

double cut_value(const IsingInstance& inst, const SpinState& x) {
  check_size(inst, x.size());
  double cut = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const int xi = x.spin(i);
    inst.for_each_neighbor(i, [&](std::size_t j, auto w) {
      if (j > i && xi != x.spin(j)) cut += static_cast<double>(w);
    });
  }
  return cut;
}

double delta_energy(const IsingInstance& inst, const SpinState& x, std::size_t i) {
  check_size(inst, x.size());
  check_index(x, i);
  return 2.0 * x.spin(i) * x.field(i);
}

std::int64_t delta_energy_packed(const IsingInstance& inst, const SpinState& x,
                                 std::size_t i) {
  if (!inst.has_bitplanes()) throw std::logic_error("instance has no sign bitplanes");
  check_size(inst, x.size());
  check_index(x, i);
  const auto mask = inst.edge_mask().row(i);
  const auto sign = inst.sign_plane().row(i);
  const auto bits = x.bits();
  std::int64_t agree = 0;
  std::int64_t deg = 0;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    agree += std::popcount(mask[k] & ~(sign[k] ^ bits[k]));
    deg += std::popcount(mask[k]);
  }
  const std::int64_t h = 2 * agree - deg;
  return 2 * x.spin(i) * h;
}

void apply_flip(const IsingInstance& inst, SpinState& x, std::size_t i) {
  check_size(inst, x.size());
  check_index(x, i);
  x.bits_[i / 64] ^= std::uint64_t{1} << (i % 64);
  // h_j changes by J_ji (x_i' - x_i) = 2 J_ij x_i' = -2 w_ij x_i'.
  const double two_xi = 2.0 * x.spin(i);
  auto& h = x.fields_;
  inst.for_each_neighbor(i, [&](std::size_t j, auto w) {
    h[j] -= two_xi * static_cast<double>(w);
  });
}

}  // namespace cimbench
