#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cimbench/energy.hpp"
#include "cimbench/random.hpp"
#include "oracles.hpp"

using namespace cimbench;

namespace {

IsingInstance triangle() { return parse_edge_list("3 3\n1 2 1\n1 3 1\n2 3 1"); }
// J_12 = +1, i.e. w_12 = -1.
IsingInstance ferro_pair() { return parse_edge_list("2 1\n1 2 -1"); }

}  // namespace

TEST_CASE("cut_value examples") {
  const auto tri = triangle();
  CHECK(cut_value(tri, SpinState::from_spins(tri, std::vector{1, 1, -1})) == 2.0);
  for (int s : {1, -1}) CHECK(cut_value(tri, SpinState::uniform(tri, s)) == 0.0);

  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 20; ++rep) {
    const auto d = oracle::random_dense(10, rng, 0.7, 3);
    const auto inst = oracle::to_instance(d);
    const auto x = oracle::random_spins(10, rng);
    CHECK(cut_value(inst, SpinState::from_spins(inst, x)) == static_cast<double>(oracle::cut(d, x)));
  }
}

TEST_CASE("ising_energy examples") {
  const auto pair = ferro_pair();
  CHECK(ising_energy(pair, SpinState::uniform(pair, 1)).value == -1.0);
  CHECK(ising_energy(pair, SpinState::uniform(pair, 1)).per_spin == -0.5);

  const auto empty = IsingInstance::from_edges(5, {});
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    CHECK(ising_energy(empty, SpinState::from_spins(empty, oracle::random_spins(5, rng))).value == 0.0);
  }
}

TEST_CASE("CUT = (W - E) / 2 and E = sum w x x, both forms") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 50; ++rep) {
    const auto d = oracle::random_dense(12, rng, 0.8, rep % 2 ? 4 : 1);
    const auto inst = oracle::to_instance(d);
    const auto x = oracle::random_spins(12, rng);
    const auto s = SpinState::from_spins(inst, x);
    const double e = ising_energy(inst, s).value;
    CHECK(e == static_cast<double>(oracle::energy(d, x)));
    CHECK(cut_value(inst, s) == (inst.total_weight() - e) / 2.0);
    CHECK(2 * oracle::cut(d, x) == oracle::total_weight(d) - oracle::energy(d, x));
  }
}

TEST_CASE("dimension mismatch is rejected") {
  const auto tri = triangle();
  const auto pair = ferro_pair();
  const auto s2 = SpinState::uniform(pair, 1);
  CHECK_THROWS_AS(ising_energy(tri, s2), std::invalid_argument);
  CHECK_THROWS_AS(cut_value(tri, s2), std::invalid_argument);
  CHECK_THROWS_AS(SpinState::from_spins(tri, std::vector{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SpinState::from_spins(pair, std::vector{1, 0}), std::invalid_argument);
}

TEST_CASE("delta_energy examples") {
  const auto pair = ferro_pair();
  const auto up = SpinState::uniform(pair, 1);
  CHECK(delta_energy(pair, up, 0) == 2.0);
  CHECK(delta_energy(pair, up, 1) == 2.0);
  CHECK(delta_energy_packed(pair, up, 1) == 2);
  CHECK_THROWS_AS(delta_energy(pair, up, 2), std::out_of_range);
  CHECK_THROWS_AS(delta_energy_packed(pair, up, 2), std::out_of_range);

  // Vertex 0 sees one +1 and one -1 neighbour contribution.
  const auto inst = parse_edge_list("3 2\n1 2 1\n1 3 1");
  const auto x = SpinState::from_spins(inst, std::vector{1, 1, -1});
  CHECK(delta_energy(inst, x, 0) == 0.0);
  CHECK(delta_energy_packed(inst, x, 0) == 0);
}

TEST_CASE("delta_energy equals the recomputed energy difference") {
  std::mt19937_64 rng(1000);
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = 2 + rng() % 30;
    const auto d = oracle::random_dense(n, rng, 0.6);
    const auto inst = oracle::to_instance(d);
    auto x = oracle::random_spins(n, rng);
    const std::size_t i = rng() % n;
    const auto s = SpinState::from_spins(inst, x);
    const long long before = oracle::energy(d, x);
    x[i] = -x[i];
    const long long after = oracle::energy(d, x);
    CHECK(delta_energy(inst, s, i) == static_cast<double>(after - before));
    CHECK(delta_energy_packed(inst, s, i) == after - before);
  }
}

TEST_CASE("delta_energy_packed edge cases") {
  const auto isolated = parse_edge_list("4 1\n1 2 1");
  std::mt19937_64 rng(5);
  const auto s = SpinState::from_spins(isolated, oracle::random_spins(4, rng));
  CHECK(delta_energy_packed(isolated, s, 3) == 0);

  // Full +-1 row, every neighbour +1, x_i = +1: dE = 2 * (-sum_j w_ij).
  const auto inst = gen_complete_pm1(70, 11);
  const auto up = SpinState::uniform(inst, 1);
  for (std::size_t i : {0U, 33U, 69U}) {
    double row = 0.0;
    for (std::size_t j = 0; j < 70; ++j) row += inst.weight(i, j);
    CHECK(delta_energy_packed(inst, up, i) == static_cast<std::int64_t>(-2.0 * row));
  }

  const auto real = parse_edge_list("2 1\n1 2 0.5");
  CHECK_THROWS_AS(delta_energy_packed(real, SpinState::uniform(real, 1), 0), std::logic_error);
}

TEST_CASE("apply_flip keeps the field cache exact") {
  std::mt19937_64 rng(77);
  const auto d = oracle::random_dense(45, rng, 0.9);
  const auto inst = oracle::to_instance(d);
  auto x = SpinState::from_spins(inst, oracle::random_spins(45, rng));

  const auto original = x;
  apply_flip(inst, x, 7);
  CHECK(x.spin(7) == -original.spin(7));
  apply_flip(inst, x, 7);
  CHECK(x == original);

  for (int k = 0; k < 500; ++k) apply_flip(inst, x, rng() % 45);
  const auto spins = x.spins();
  const auto h = oracle::fields(d, spins);
  for (std::size_t i = 0; i < 45; ++i) CHECK(x.field(i) == static_cast<double>(h[i]));
  CHECK(SpinState::from_spins(inst, spins) == x);

  CHECK_THROWS_AS(apply_flip(inst, x, 45), std::out_of_range);
}

TEST_CASE("apply_flip on a zero-coupling instance leaves fields at zero") {
  const auto empty = IsingInstance::from_edges(6, {});
  auto x = SpinState::uniform(empty, -1);
  for (std::size_t i = 0; i < 6; ++i) {
    apply_flip(empty, x, i);
    for (double h : x.fields()) CHECK(h == 0.0);
  }
}

TEST_CASE("real-weight fields track recomputation closely") {
  std::mt19937_64 rng(8);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = i + 1; j < 20; ++j)
      edges.push_back({i, j, std::uniform_real_distribution<double>(-2, 2)(rng)});
  const auto inst = IsingInstance::from_edges(20, edges);
  RandomStream stream(1);
  auto x = SpinState::random(inst, stream);
  for (int k = 0; k < 300; ++k) apply_flip(inst, x, rng() % 20);
  const auto fresh = compute_fields(inst, x.bits());
  for (std::size_t i = 0; i < 20; ++i) CHECK(x.field(i) == doctest::Approx(fresh[i]).epsilon(1e-12));
}
