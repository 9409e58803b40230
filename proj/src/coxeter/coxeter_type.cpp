#include "coxlat/coxeter/coxeter_type.hpp"

#include <algorithm>
#include <numeric>

namespace coxlat {

namespace {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    case Family::H: return 'H';
    case Family::I: return 'I';
  }
  return '?';
}

// Coxeter matrix of one factor in Bourbaki numbering (0-based).
std::vector<std::vector<int>> factor_matrix(const Factor& f) {
  const int n = f.rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto edge = [&](int i, int j, int label) { m[i][j] = m[j][i] = label; };
  switch (f.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 3);
      edge(n - 2, n - 1, 4);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 3);
      edge(n - 3, n - 1, 3);
      break;
    case Family::E:
      // 1-3-4-5-6(-7-8) with 2 attached to 4.
      edge(0, 2, 3);
      edge(1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::F:
      edge(0, 1, 3);
      edge(1, 2, 4);
      edge(2, 3, 3);
      break;
    case Family::G:
      edge(0, 1, 6);
      break;
    case Family::H:
      edge(0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::I:
      edge(0, 1, f.dihedral_m);
      break;
  }
  return m;
}

}  // namespace

std::string Factor::name() const {
  if (family == Family::I) return "I2(" + std::to_string(dihedral_m) + ")";
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

int CoxeterType::rank() const {
  return std::accumulate(factors.begin(), factors.end(), 0,
                         [](int acc, const Factor& f) { return acc + f.rank; });
}

std::string CoxeterType::name() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "x";
    out += f.name();
  }
  return out;
}

BigInt CoxeterType::expected_order() const {
  BigInt order = 1;
  for (const auto& f : factors)
    for (int d : classical_degrees(f)) order *= d;
  return order;
}

std::vector<std::vector<int>> CoxeterType::coxeter_matrix() const {
  const int n = rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  int offset = 0;
  for (const auto& f : factors) {
    const auto fm = factor_matrix(f);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) m[offset + i][offset + j] = fm[i][j];
    offset += f.rank;
  }
  return m;
}

void validate(const Factor& f) {
  const std::string name = f.name();
  auto reject = [&]() { throw InvalidType("inadmissible Coxeter type " + name); };
  switch (f.family) {
    case Family::A: if (f.rank < 1) reject(); break;
    case Family::B: if (f.rank < 2) reject(); break;
    case Family::D: if (f.rank < 4) reject(); break;
    case Family::E: if (f.rank < 6 || f.rank > 8) reject(); break;
    case Family::F: if (f.rank != 4) reject(); break;
    case Family::G: if (f.rank != 2) reject(); break;
    case Family::H: if (f.rank != 3 && f.rank != 4) reject(); break;
    case Family::I: if (f.rank != 2 || f.dihedral_m < 3) reject(); break;
  }
  if (f.family != Family::I && f.dihedral_m != 0) reject();
}

void validate(const CoxeterType& t) {
  if (t.factors.empty()) throw InvalidType("empty Coxeter type");
  for (const auto& f : t.factors) validate(f);
}

CoxeterType make_type(Family family, int rank) {
  CoxeterType t{{Factor{family, rank, 0}}};
  validate(t);
  return t;
}

CoxeterType dihedral_type(int m) {
  CoxeterType t{{Factor{Family::I, 2, m}}};
  validate(t);
  return t;
}

CoxeterType product(const CoxeterType& a, const CoxeterType& b) {
  CoxeterType t = a;
  t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
  return t;
}

std::vector<int> classical_degrees(const Factor& f) {
  const int n = f.rank;
  std::vector<int> d;
  switch (f.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
    case Family::H:
      d = n == 3 ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30};
      break;
    case Family::I: d = {2, f.dihedral_m}; break;
  }
  return d;
}

}  // namespace coxlat
