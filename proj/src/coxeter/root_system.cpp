#include "coxlat/coxeter/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace coxlat {

namespace {

// s_i(c) = c - (2 B(c, a_i) / B(a_i, a_i)) e_i
std::vector<Scalar> reflect(const Matrix& gram, std::size_t i, std::vector<Scalar> c) {
  Scalar pairing;
  for (std::size_t j = 0; j < c.size(); ++j) pairing += gram(i, j) * c[j];
  c[i] -= Scalar(2) * pairing / gram(i, i);
  return c;
}

bool is_nonnegative(const std::vector<Scalar>& c) {
  return std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.sign() >= 0; });
}

Scalar coordinate_sum(const std::vector<Scalar>& c) {
  Scalar s;
  for (const auto& x : c) s += x;
  return s;
}

SubsetMask support_of(const std::vector<Scalar>& c) {
  SubsetMask m = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) m |= SubsetMask{1} << i;
  return m;
}

void check_positive_definite(const Matrix& gram) {
  for (std::size_t k = 1; k <= gram.rows(); ++k) {
    Matrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = gram(i, j);
    if (determinant(lead).sign() <= 0) throw std::logic_error("Gram matrix is not positive definite");
  }
}

Matrix reflection_matrix(const Matrix& gram, std::size_t i) {
  const std::size_t n = gram.rows();
  Matrix s = Matrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) s(i, j) -= Scalar(2) * gram(i, j) / gram(i, i);
  return s;
}

RootSystem build_geometric(const CoxeterType& type) {
  RootSystem rs;
  rs.type = type;
  rs.rank = type.rank();
  rs.coxeter = type.coxeter_matrix();
  const auto n = static_cast<std::size_t>(rs.rank);

  rs.gram = Matrix(n, n);
  std::size_t offset = 0;
  for (const auto& f : type.factors) {
    const Matrix g = factor_gram(f);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) rs.gram(offset + i, offset + j) = g(i, j);
    offset += g.rows();
  }
  check_positive_definite(rs.gram);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix s = reflection_matrix(rs.gram, i);
    if (!(s.transpose() * rs.gram * s == rs.gram))
      throw std::logic_error("simple reflection does not preserve the Gram form");
  }

  // Close the simple roots under the simple reflections.
  std::map<std::vector<Scalar>, bool> seen;
  std::deque<std::vector<Scalar>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> e(n);
    e[i] = Scalar(1);
    seen.emplace(e, true);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    auto c = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      auto image = reflect(rs.gram, i, c);
      if (seen.emplace(image, true).second) queue.push_back(std::move(image));
    }
    if (seen.size() > 255) throw std::logic_error("root system too large for 8-bit root indices");
  }

  std::vector<std::vector<Scalar>> positive;
  for (const auto& [c, unused] : seen) {
    if (is_nonnegative(c)) {
      positive.push_back(c);
    } else {
      std::vector<Scalar> neg(c.size());
      for (std::size_t k = 0; k < c.size(); ++k) neg[k] = -c[k];
      if (!is_nonnegative(neg)) throw std::logic_error("root is neither positive nor negative");
    }
  }
  if (positive.size() * 2 != seen.size()) throw std::logic_error("roots do not come in +/- pairs");

  // Height ascending, then coordinates descending so simple root i sits at i.
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    const auto ha = coordinate_sum(a), hb = coordinate_sum(b);
    if (ha != hb) return ha < hb;
    return b < a;
  });
  rs.positive_count = positive.size();
  rs.roots = positive;
  for (const auto& c : positive) {
    std::vector<Scalar> neg(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) neg[k] = -c[k];
    rs.roots.push_back(std::move(neg));
  }

  std::map<std::vector<Scalar>, std::size_t> index;
  for (std::size_t r = 0; r < rs.roots.size(); ++r) index.emplace(rs.roots[r], r);
  rs.support.reserve(rs.roots.size());
  for (const auto& c : rs.roots) rs.support.push_back(support_of(c));

  for (std::size_t i = 0; i < n; ++i) {
    RootPerm perm(rs.roots.size());
    for (std::size_t r = 0; r < rs.roots.size(); ++r) {
      const auto it = index.find(reflect(rs.gram, i, rs.roots[r]));
      if (it == index.end()) throw std::logic_error("root set not closed under a simple reflection");
      perm[r] = static_cast<std::uint8_t>(it->second);
    }
    rs.simple_reflections.push_back(std::move(perm));
  }
  return rs;
}

// Roots of I2(m) are the unit vectors at angle k*pi/m, k mod 2m; the
// positive ones are k = 0..m-1 with a_1 at k = 0 and a_2 at k = m-1. The
// reflection in the line orthogonal to root j sends k to 2j + m - k.
RootSystem build_dihedral(const CoxeterType& type) {
  const int m = type.factors.front().dihedral_m;
  RootSystem rs;
  rs.type = type;
  rs.rank = 2;
  rs.dihedral_model = true;
  rs.coxeter = type.coxeter_matrix();
  rs.positive_count = static_cast<std::size_t>(m);

  // Positive index -> angle unit: 0, m-1, 1, m-2, 2, ...
  std::vector<int> unit_of(static_cast<std::size_t>(2 * m));
  for (int i = 0, lo = 0, hi = m - 1; i < m; ++i) unit_of[i] = (i % 2 == 0) ? lo++ : hi--;
  for (int i = 0; i < m; ++i) unit_of[i + m] = unit_of[i] + m;
  std::vector<std::size_t> index_of(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < 2 * m; ++i) index_of[unit_of[i]] = static_cast<std::size_t>(i);

  rs.support.resize(static_cast<std::size_t>(2 * m), 0b11);
  rs.support[0] = rs.support[static_cast<std::size_t>(m)] = 0b01;
  rs.support[1] = rs.support[static_cast<std::size_t>(m) + 1] = 0b10;

  for (int j : {0, m - 1}) {
    RootPerm perm(static_cast<std::size_t>(2 * m));
    for (int r = 0; r < 2 * m; ++r) {
      const int image = ((2 * j + m - unit_of[r]) % (2 * m) + 2 * m) % (2 * m);
      perm[r] = static_cast<std::uint8_t>(index_of[image]);
    }
    rs.simple_reflections.push_back(std::move(perm));
  }
  return rs;
}

}  // namespace

Matrix factor_gram(const Factor& f) {
  const auto n = static_cast<std::size_t>(f.rank);
  Matrix g(n, n);
  const Scalar phi = Scalar::golden_ratio();
  switch (f.family) {
    case Family::A:
    case Family::D:
    case Family::E: {
      Factor tmp = f;
      const auto m = CoxeterType{{tmp}}.coxeter_matrix();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = (i == j) ? Scalar(2) : (m[i][j] == 3 ? Scalar(-1) : Scalar(0));
      break;
    }
    case Family::B:
      for (std::size_t i = 0; i < n; ++i) g(i, i) = Scalar(2);
      g(n - 1, n - 1) = Scalar(1);
      for (std::size_t i = 0; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = Scalar(-1);
      break;
    case Family::F:
      g = Matrix{{2, -1, 0, 0},
                 {-1, 2, -1, 0},
                 {0, -1, 1, Scalar::rational(-1, 2)},
                 {0, 0, Scalar::rational(-1, 2), 1}};
      break;
    case Family::G:
      g = Matrix{{2, -3}, {-3, 6}};
      break;
    case Family::H:
      for (std::size_t i = 0; i < n; ++i) g(i, i) = Scalar(2);
      g(0, 1) = g(1, 0) = -phi;
      for (std::size_t i = 1; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = Scalar(-1);
      break;
    case Family::I:
      throw InvalidType("I2(m) has no geometric model; use the dihedral model");
  }
  return g;
}

RootSystem build_root_system(const CoxeterType& type) {
  validate(type);
  const bool has_dihedral = std::any_of(type.factors.begin(), type.factors.end(),
                                        [](const Factor& f) { return f.family == Family::I; });
  if (has_dihedral) {
    if (!type.irreducible()) throw InvalidType("products with an I2(m) factor are not supported");
    return build_dihedral(type);
  }
  if (type.rank() > 16) throw InvalidType("rank above 16 is not supported");
  return build_geometric(type);
}

Scalar RootSystem::form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * gram(i, j) * y[j];
  }
  return s;
}

Matrix RootSystem::hyperplane_functionals() const {
  if (!has_geometry()) throw InvalidType("dihedral model has no coordinate realization");
  const auto n = static_cast<std::size_t>(rank);
  Matrix f(positive_count, n);
  for (std::size_t r = 0; r < positive_count; ++r)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) f(r, j) += roots[r][i] * gram(i, j);
  return f;
}

Scalar RootSystem::height(std::size_t r) const {
  const std::size_t p = positive_of(r);
  Scalar h;
  if (has_geometry()) {
    h = coordinate_sum(roots[p]);
  } else {
    h = Scalar(p < 2 ? 1 : static_cast<long>(2 + (p - 2) / 2));
  }
  return is_positive(r) ? h : -h;
}

}  // namespace coxlat
