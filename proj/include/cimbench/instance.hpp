#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cimbench {

// Undirected weighted edge with 0-based endpoints.
struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double w = 0.0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Row-major bit matrix, 64-bit words, each row zero-padded to a whole word.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {data_.data() + r * words_, words_};
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

enum class WeightClass {
  unit,  // every edge weight is +1 or -1
  real,
};

/// MAX-CUT / Ising problem on an undirected graph.
///
/// Edge weights w_ij are symmetric with w_ii = 0; the Ising couplings are
/// J_ij = -w_ij, so the energy E(x) = -sum_{i<j} J_ij x_i x_j equals
/// sum_{i<j} w_ij x_i x_j and CUT(x) = (W - E(x)) / 2.
///
/// Adjacency is kept in compressed rows with ascending column order; every
/// row sum in the library walks that order, so floating-point reductions
/// are reproducible. Unit-weight instances store int32 weights and, in
/// addition, two bitplanes: `edge_mask` (bit set where w_ij != 0) and
/// `sign_plane` (bit set where w_ij = -1, i.e. J_ij = +1).
///
/// Immutable after construction; safe to share between threads.
class IsingInstance {
 public:
  IsingInstance() = default;

  // Zero-weight edges are dropped. Throws std::invalid_argument on an
  // endpoint out of range, a self-loop, a duplicate pair or a non-finite
  // weight.
  static IsingInstance from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const noexcept { return n_; }
  WeightClass weight_class() const noexcept { return class_; }
  bool has_bitplanes() const noexcept { return class_ == WeightClass::unit; }

  // Sum of w_ij over i < j.
  double total_weight() const noexcept { return total_weight_; }
  // Number of nonzero edges.
  std::size_t edge_count() const noexcept { return cols_.size() / 2; }

  double weight(std::size_t i, std::size_t j) const;
  double coupling(std::size_t i, std::size_t j) const { return -weight(i, j); }

  // Canonical edge list: i < j, sorted by (i, j).
  std::vector<Edge> edges() const;

  const BitMatrix& edge_mask() const noexcept { return mask_; }
  const BitMatrix& sign_plane() const noexcept { return sign_; }

  std::size_t degree(std::size_t i) const noexcept {
    return row_ptr_[i + 1] - row_ptr_[i];
  }

  // Calls f(j, w_ij) for each neighbour j of i in ascending j.
  template <class F>
  void for_each_neighbor(std::size_t i, F&& f) const {
    const std::size_t lo = row_ptr_[i];
    const std::size_t hi = row_ptr_[i + 1];
    if (class_ == WeightClass::unit) {
      for (std::size_t k = lo; k < hi; ++k) f(std::size_t{cols_[k]}, unit_w_[k]);
    } else {
      for (std::size_t k = lo; k < hi; ++k) f(std::size_t{cols_[k]}, real_w_[k]);
    }
  }

  // out_i = sum_j J_ij v_j, summed in ascending j.
  void multiply_couplings(std::span<const double> v, std::span<double> out) const;

  friend bool operator==(const IsingInstance& a, const IsingInstance& b);

 private:
  std::size_t n_ = 0;
  WeightClass class_ = WeightClass::unit;
  double total_weight_ = 0.0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<std::int32_t> unit_w_;
  std::vector<double> real_w_;
  BitMatrix mask_;
  BitMatrix sign_;
};

/// Complete graph on n vertices with i.i.d. uniform +-1 weights.
///
/// Edges are drawn in row-major order (i ascending, then j > i ascending)
/// from RandomStream(seed); edge (i, j) gets -1 when the top bit of the next
/// 64-bit output is set and +1 otherwise. Throws std::invalid_argument for
/// n < 2.
IsingInstance gen_complete_pm1(std::size_t n, std::uint64_t seed);

// Gset-style edge list: a header "n m" then m lines "i j w" with 1-based
// endpoints. Lines whose first non-blank character is '#' and blank lines
// are skipped. Errors are reported as ParseError carrying the line number.
IsingInstance parse_edge_list(std::string_view text);
IsingInstance read_edge_list(const std::string& path);

// Canonical form: nonzero edges sorted by (i, j) with i < j, 1-based, LF
// line endings and no trailing newline after the last line. Weights are
// printed in shortest round-trip form.
std::string write_edge_list(const IsingInstance& inst);
void save_edge_list(const IsingInstance& inst, const std::string& path);

}  // namespace cimbench
