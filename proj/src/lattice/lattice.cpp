#include "coxlat/lattice/lattice.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "coxlat/coxeter/parabolic.hpp"
#include "coxlat/kernels/kernels.hpp"
#include "coxlat/parallel.hpp"

namespace coxlat {

namespace {

std::size_t words_for(std::size_t bits) { return std::max<std::size_t>(1, (bits + 63) / 64); }

bool vanishes_on(std::span<const Scalar> f, const Matrix& basis) {
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Scalar s;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (!f[j].is_zero()) s += f[j] * basis(r, j);
    if (!s.is_zero()) return false;
  }
  return true;
}

// X cut by the hyperplane f = 0, where f does not vanish on X.
Subspace cut(const Subspace& x, std::span<const Scalar> f) {
  const Matrix& b = x.basis();
  std::vector<Scalar> values(b.rows());
  std::size_t pivot = b.rows();
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t j = 0; j < f.size(); ++j)
      if (!f[j].is_zero()) values[r] += f[j] * b(r, j);
    if (pivot == b.rows() && !values[r].is_zero()) pivot = r;
  }
  if (pivot == b.rows()) throw std::logic_error("hyperplane already contains the subspace");
  Matrix rows(0, b.cols());
  std::vector<Scalar> v(b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    if (r == pivot) continue;
    const Scalar c = values[r] / values[pivot];
    for (std::size_t j = 0; j < b.cols(); ++j) v[j] = b(r, j) - c * b(pivot, j);
    rows.append_row(v);
  }
  return Subspace::span(rows);
}

}  // namespace

std::string IntersectionLattice::hyper_key(std::span<const std::uint64_t> set) const {
  return {reinterpret_cast<const char*>(set.data()), set.size() * sizeof(std::uint64_t)};
}

IntersectionLattice IntersectionLattice::build(const RootSystem& rs) {
  IntersectionLattice lat;
  lat.rank_ = rs.rank;
  lat.hyperplane_count_ = rs.positive_count;
  lat.words_ = words_for(rs.positive_count);
  const std::size_t N = rs.positive_count;
  const std::size_t W = lat.words_;

  auto add_node = [&](int dim, const std::vector<std::uint64_t>& set) {
    lat.by_hyper_.emplace(lat.hyper_key(set), lat.dims_.size());
    lat.dims_.push_back(dim);
    lat.hyper_.insert(lat.hyper_.end(), set.begin(), set.end());
  };

  if (!rs.has_geometry()) {
    std::vector<std::uint64_t> set(W, 0);
    add_node(2, set);
    for (std::size_t h = 0; h < N; ++h) {
      std::fill(set.begin(), set.end(), 0);
      set[h >> 6] |= std::uint64_t{1} << (h & 63);
      add_node(1, set);
    }
    std::fill(set.begin(), set.end(), 0);
    for (std::size_t h = 0; h < N; ++h) set[h >> 6] |= std::uint64_t{1} << (h & 63);
    add_node(0, set);
    lat.finish_order();
    return lat;
  }

  const auto n = static_cast<std::size_t>(rs.rank);
  const Matrix functionals = rs.hyperplane_functionals();
  auto set_of = [&](const Subspace& y) {
    std::vector<std::uint64_t> set(W, 0);
    for (std::size_t h = 0; h < N; ++h)
      if (vanishes_on(functionals.row(h), y.basis())) set[h >> 6] |= std::uint64_t{1} << (h & 63);
    return set;
  };

  lat.spaces_.push_back(Subspace::full(n));
  add_node(static_cast<int>(n), std::vector<std::uint64_t>(W, 0));

  // Nodes are appended in breadth-first order, which is by codimension.
  for (std::size_t x = 0; x < lat.size(); ++x) {
    std::vector<std::uint64_t> done(lat.hyperplanes(x).begin(), lat.hyperplanes(x).end());
    for (std::size_t h = 0; h < N; ++h) {
      if ((done[h >> 6] >> (h & 63)) & 1u) continue;
      Subspace y = cut(lat.spaces_[x], functionals.row(h));
      auto set = set_of(y);
      // Every hyperplane containing Y gives the same cut from X.
      for (std::size_t w = 0; w < W; ++w) done[w] |= set[w];
      if (lat.by_hyper_.contains(lat.hyper_key(set))) continue;
      lat.spaces_.push_back(std::move(y));
      add_node(lat.dims_[x] - 1, set);
    }
  }
  for (std::size_t x = 0; x < lat.size(); ++x) lat.by_space_.emplace(lat.spaces_[x].key(), x);
  lat.finish_order();
  return lat;
}

void IntersectionLattice::finish_order() { rows_ = std::make_unique<LazyRow[]>(size()); }

bool IntersectionLattice::leq(std::size_t x, std::size_t y) const {
  const auto hx = hyperplanes(x), hy = hyperplanes(y);
  for (std::size_t w = 0; w < words_; ++w)
    if ((hx[w] & ~hy[w]) != 0) return false;
  return true;
}

const Subspace& IntersectionLattice::space(std::size_t x) const {
  if (!has_geometry()) throw InvalidType("dihedral model has no coordinate realization");
  return spaces_[x];
}

std::vector<std::size_t> IntersectionLattice::upper_set(std::size_t x) const {
  std::vector<std::uint64_t> bits(words_for(size()));
  kernels::superset_scan(hyper_.data(), size(), words_, hyper_.data() + x * words_, bits.data());
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < bits.size(); ++w)
    for (std::uint64_t b = bits[w]; b != 0; b &= b - 1) out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

std::vector<std::size_t> IntersectionLattice::count_by_dim() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(rank_) + 1, 0);
  for (int d : dims_) ++counts[static_cast<std::size_t>(d)];
  return counts;
}

std::optional<std::size_t> IntersectionLattice::find(std::span<const std::uint64_t> hyperplane_set) const {
  if (hyperplane_set.size() != words_) return std::nullopt;
  const auto it = by_hyper_.find(hyper_key(hyperplane_set));
  if (it == by_hyper_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> IntersectionLattice::find(const Subspace& s) const {
  const auto it = by_space_.find(s.key());
  if (it == by_space_.end()) return std::nullopt;
  return it->second;
}

std::span<const MoebiusEntry> IntersectionLattice::moebius_row(std::size_t x) const {
  LazyRow& row = rows_[x];
  std::call_once(row.once, [&] {
    const auto up = upper_set(x);
    const std::size_t u = up.size();
    // H(Z) within H(Y) iff the complement of H(Y) is within that of H(Z).
    std::vector<std::uint64_t> complement(u * words_);
    for (std::size_t i = 0; i < u; ++i)
      for (std::size_t w = 0; w < words_; ++w) complement[i * words_ + w] = ~hyper_[up[i] * words_ + w];
    std::vector<std::int64_t> values(u, 0);
    std::vector<std::uint64_t> below(words_for(u));
    values[0] = 1;
    row.entries.emplace_back(static_cast<std::uint32_t>(x), 1);
    // Nodes of [X, Y) precede Y in node order.
    for (std::size_t i = 1; i < u; ++i) {
      kernels::superset_scan(complement.data(), i, words_, complement.data() + i * words_, below.data());
      values[i] = -kernels::masked_sum_i64(values.data(), below.data(), i);
      if (values[i] != 0) row.entries.emplace_back(static_cast<std::uint32_t>(up[i]), values[i]);
    }
  });
  return row.entries;
}

std::int64_t IntersectionLattice::moebius(std::size_t x, std::size_t y) const {
  if (!leq(x, y)) return 0;
  const auto row = moebius_row(x);
  const auto it = std::lower_bound(row.begin(), row.end(), MoebiusEntry{static_cast<std::uint32_t>(y), 0},
                                   [](const MoebiusEntry& a, const MoebiusEntry& b) { return a.first < b.first; });
  return (it != row.end() && it->first == y) ? it->second : 0;
}

IntPolynomial char_poly_upper(const IntersectionLattice& lat, std::size_t x) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(lat.dim(x)) + 1);
  for (const auto& [y, mu] : lat.moebius_row(x)) coeffs[static_cast<std::size_t>(lat.dim(y))] += BigInt(static_cast<long>(mu));
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial sum_identity_check(const IntersectionLattice& lat, unsigned threads) {
  std::vector<IntPolynomial> terms(lat.size());
  parallel_for(lat.size(), threads, [&](std::size_t y) { terms[y] = char_poly_upper(lat, y); });
  IntPolynomial sum;
  for (const auto& t : terms) sum += t;
  return sum;
}

std::vector<long> exponents(const IntersectionLattice& lat) {
  const auto fac = factor_integer_roots(char_poly_upper(lat, lat.top()));
  if (fac.cofactor.degree() != 0 || fac.cofactor.leading() != 1)
    throw std::logic_error("characteristic polynomial does not split over the integers");
  std::vector<long> out;
  for (const auto& r : fac.roots) out.push_back(r.get_si());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> fix_hyperplanes(const RootSystem& rs, SubsetMask k, std::size_t words) {
  std::vector<std::uint64_t> set(words, 0);
  for (std::size_t h : parabolic_positive_roots(rs, k)) set[h >> 6] |= std::uint64_t{1} << (h & 63);
  return set;
}

std::size_t fix_node(const IntersectionLattice& lat, const RootSystem& rs, SubsetMask k) {
  const auto node = lat.find(fix_hyperplanes(rs, k, lat.hyperplane_words()));
  if (!node) throw std::logic_error("Fix(W_K) is missing from the lattice");
  if (lat.has_geometry()) {
    const auto by_space = lat.find(fixed_space(rs, k));
    if (by_space != node) throw std::logic_error("Fix(W_K) hyperplane set disagrees with its kernel");
  }
  return *node;
}

}  // namespace coxlat
