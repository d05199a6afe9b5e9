#include "cimbench/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cimbench/error.hpp"
#include "cimbench/random.hpp"
#include "text.hpp"

namespace cimbench {

namespace text {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace text

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

IsingInstance IsingInstance::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw std::invalid_argument("instance needs at least one vertex");
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("too many vertices");

  for (auto& e : edges) {
    if (e.i >= n || e.j >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.i == e.j) throw std::invalid_argument("self-loop");
    if (!std::isfinite(e.w)) throw std::invalid_argument("non-finite weight");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  const auto key_less = [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  };
  if (!std::is_sorted(edges.begin(), edges.end(), key_less))
    std::sort(edges.begin(), edges.end(), key_less);
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].i == edges[k - 1].i && edges[k].j == edges[k - 1].j)
      throw std::invalid_argument("duplicate edge");
  }
  std::erase_if(edges, [](const Edge& e) { return e.w == 0.0; });

  IsingInstance inst;
  inst.n_ = n;
  inst.class_ = std::all_of(edges.begin(), edges.end(),
                            [](const Edge& e) { return e.w == 1.0 || e.w == -1.0; })
                    ? WeightClass::unit
                    : WeightClass::real;

  // Walking canonical edges in (i, j) order appends to each row in
  // ascending column order, so no per-row sort is needed.
  inst.row_ptr_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++inst.row_ptr_[e.i + 1];
    ++inst.row_ptr_[e.j + 1];
  }
  for (std::size_t i = 0; i < n; ++i) inst.row_ptr_[i + 1] += inst.row_ptr_[i];
  const std::size_t nnz = inst.row_ptr_[n];
  inst.cols_.resize(nnz);
  const bool unit = inst.class_ == WeightClass::unit;
  if (unit) {
    inst.unit_w_.resize(nnz);
    inst.mask_ = BitMatrix(n, n);
    inst.sign_ = BitMatrix(n, n);
  } else {
    inst.real_w_.resize(nnz);
  }
  std::vector<std::size_t> cursor(inst.row_ptr_.begin(), inst.row_ptr_.end() - 1);
  auto put = [&](std::size_t r, std::size_t c, double w) {
    const std::size_t k = cursor[r]++;
    inst.cols_[k] = static_cast<std::uint32_t>(c);
    if (unit) {
      inst.unit_w_[k] = static_cast<std::int32_t>(w);
      inst.mask_.set(r, c);
      if (w < 0) inst.sign_.set(r, c);
    } else {
      inst.real_w_[k] = w;
    }
  };
  std::int64_t unit_total = 0;
  for (const auto& e : edges) {
    put(e.i, e.j, e.w);
    put(e.j, e.i, e.w);
    inst.total_weight_ += e.w;
    if (unit) unit_total += static_cast<std::int64_t>(e.w);
  }
  if (unit) inst.total_weight_ = static_cast<double>(unit_total);
  return inst;
}

double IsingInstance::weight(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("vertex index out of range");
  if (class_ == WeightClass::unit) {
    if (!mask_.test(i, j)) return 0.0;
    return sign_.test(i, j) ? -1.0 : 1.0;
  }
  const auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
  const auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
  const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(j));
  if (it == last || *it != j) return 0.0;
  return real_w_[static_cast<std::size_t>(it - cols_.begin())];
}

std::vector<Edge> IsingInstance::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < n_; ++i) {
    for_each_neighbor(i, [&](std::size_t j, auto w) {
      if (j > i) out.push_back({i, j, static_cast<double>(w)});
    });
  }
  return out;
}

void IsingInstance::multiply_couplings(std::span<const double> v,
                                       std::span<double> out) const {
  if (v.size() != n_ || out.size() != n_)
    throw std::invalid_argument("dimension mismatch in coupling product");
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t lo = row_ptr_[i];
    const std::size_t hi = row_ptr_[i + 1];
    double acc = 0.0;
    if (class_ == WeightClass::unit) {
      for (std::size_t k = lo; k < hi; ++k)
        acc -= static_cast<double>(unit_w_[k]) * v[cols_[k]];
    } else {
      for (std::size_t k = lo; k < hi; ++k) acc -= real_w_[k] * v[cols_[k]];
    }
    out[i] = acc;
  }
}

bool operator==(const IsingInstance& a, const IsingInstance& b) {
  return a.n_ == b.n_ && a.edges() == b.edges();
}

IsingInstance gen_complete_pm1(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_complete_pm1 needs n >= 2");
  RandomStream rng(seed);
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({i, j, rng.coin() ? -1.0 : 1.0});
  }
  return IsingInstance::from_edges(n, std::move(edges));
}

IsingInstance parse_edge_list(std::string_view input) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t last_line = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;

  text::for_each_line(input, [&](std::size_t line_no, std::string_view raw) {
    const auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') return;
    last_line = line_no;
    const auto tok = text::split_ws(line);
    if (!have_header) {
      if (tok.size() != 2) throw ParseError(line_no, "expected header \"n m\"");
      const auto pn = text::parse_number<std::size_t>(tok[0]);
      const auto pm = text::parse_number<std::size_t>(tok[1]);
      if (!pn || !pm || *pn == 0)
        throw ParseError(line_no, "malformed header \"" + std::string(line) + "\"");
      n = *pn;
      m = *pm;
      have_header = true;
      edges.reserve(m);
      return;
    }
    if (edges.size() == m) throw ParseError(line_no, "more edges than declared");
    if (tok.size() != 3) throw ParseError(line_no, "expected \"i j w\"");
    const auto pi = text::parse_number<std::size_t>(tok[0]);
    const auto pj = text::parse_number<std::size_t>(tok[1]);
    const auto pw = text::parse_number<double>(tok[2]);
    if (!pi || !pj || !pw || !std::isfinite(*pw))
      throw ParseError(line_no, "malformed edge \"" + std::string(line) + "\"");
    if (*pi < 1 || *pi > n || *pj < 1 || *pj > n)
      throw ParseError(line_no, "vertex index out of range [1, " + std::to_string(n) + "]");
    if (*pi == *pj) throw ParseError(line_no, "self-loop");
    edges.push_back({*pi - 1, *pj - 1, *pw});
    edge_line.push_back(line_no);
  });

  if (!have_header) throw ParseError(0, "missing header");
  if (edges.size() != m)
    throw ParseError(last_line, "expected " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));

  // Duplicate check with line numbers; from_edges would only say "duplicate".
  std::vector<std::size_t> order(edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  auto key = [&](std::size_t k) {
    const auto& e = edges[k];
    return std::pair{std::min(e.i, e.j), std::max(e.i, e.j)};
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (key(order[k]) == key(order[k - 1])) {
      const auto later = std::max(edge_line[order[k]], edge_line[order[k - 1]]);
      throw ParseError(later, "duplicate edge");
    }
  }
  return IsingInstance::from_edges(n, std::move(edges));
}

IsingInstance read_edge_list(const std::string& path) {
  return parse_edge_list(text::read_file(path));
}

std::string write_edge_list(const IsingInstance& inst) {
  const auto edges = inst.edges();
  std::string out = std::to_string(inst.size()) + " " + std::to_string(edges.size());
  for (const auto& e : edges) {
    out += '\n';
    out += std::to_string(e.i + 1);
    out += ' ';
    out += std::to_string(e.j + 1);
    out += ' ';
    out += text::format_number(e.w);
  }
  return out;
}

void save_edge_list(const IsingInstance& inst, const std::string& path) {
  text::write_file(path, write_edge_list(inst));
}

}  // namespace cimbench
