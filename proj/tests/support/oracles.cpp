#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "coxlat/cli/cli.hpp"
#include "coxlat/coxeter/parabolic.hpp"

namespace coxlat::testing {

CoxeterType type_of(const std::string& text) { return cli::parse_type(text); }

std::vector<CoxeterType> main_types() {
  std::vector<CoxeterType> out;
  for (int n = 1; n <= 6; ++n) out.push_back(make_type(Family::A, n));
  for (int n = 2; n <= 5; ++n) out.push_back(make_type(Family::B, n));
  for (int n = 4; n <= 6; ++n) out.push_back(make_type(Family::D, n));
  out.push_back(make_type(Family::G, 2));
  out.push_back(make_type(Family::F, 4));
  out.push_back(make_type(Family::H, 3));
  out.push_back(make_type(Family::H, 4));
  for (int m = 3; m <= 12; ++m) out.push_back(dihedral_type(m));
  out.push_back(make_type(Family::E, 6));
  return out;
}

std::vector<CoxeterType> rank4_types() {
  std::vector<CoxeterType> out;
  for (const auto& t : main_types())
    if (t.rank() <= 4) out.push_back(t);
  return out;
}

std::uint64_t stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return static_cast<std::uint64_t>(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

std::uint64_t bell(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::int64_t naive_moebius(const IntersectionLattice& lat, std::size_t x, std::size_t y) {
  if (!lat.leq(x, y)) return 0;
  std::vector<std::size_t> interval;
  for (std::size_t z = 0; z < lat.size(); ++z)
    if (lat.leq(x, z) && lat.leq(z, y)) interval.push_back(z);
  // Descending codimension: every w > z has larger codimension than z.
  std::sort(interval.begin(), interval.end(), [&](std::size_t a, std::size_t b) {
    return lat.dim(a) != lat.dim(b) ? lat.dim(a) < lat.dim(b) : a < b;
  });
  std::map<std::size_t, std::int64_t> mu;
  for (std::size_t z : interval) {
    if (z == y) {
      mu[z] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (const auto& [w, v] : mu)
      if (w != z && lat.leq(z, w)) s += v;
    mu[z] = -s;
  }
  return mu.at(x);
}

namespace {

using Vec = std::vector<int>;

struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
  Vec apply(const Vec& v) const {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(perm[i])] = sign[i] * v[i];
    return out;
  }
};

}  // namespace

std::vector<std::size_t> d_coordinate_orbit_sizes(int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<Vec> simple(un, Vec(un, 0));
  for (std::size_t i = 0; i + 1 < un; ++i) {
    simple[i][i] = 1;
    simple[i][i + 1] = -1;
  }
  simple[un - 1][un - 2] = 1;
  simple[un - 1][un - 1] = 1;

  const std::size_t subsets = std::size_t{1} << un;
  std::vector<std::set<SubsetMask>> orbit(subsets);
  std::vector<int> perm(un);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t signs = 0; signs < (1u << un); ++signs) {
      if (std::popcount(signs) % 2 != 0) continue;
      SignedPerm w{perm, std::vector<int>(un)};
      for (std::size_t i = 0; i < un; ++i) w.sign[i] = ((signs >> i) & 1u) ? -1 : 1;
      std::vector<int> image(un, -1);
      for (std::size_t i = 0; i < un; ++i) {
        const Vec v = w.apply(simple[i]);
        for (std::size_t j = 0; j < un; ++j)
          if (v == simple[j]) image[i] = static_cast<int>(j);
      }
      for (SubsetMask k = 0; k < subsets; ++k) {
        SubsetMask j = 0;
        bool ok = true;
        for (std::size_t i = 0; i < un && ok; ++i) {
          if (((k >> i) & 1u) == 0) continue;
          if (image[i] < 0) ok = false;
          else j |= SubsetMask{1} << image[i];
        }
        if (ok) orbit[k].insert(j);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::size_t> sizes(subsets);
  for (std::size_t k = 0; k < subsets; ++k) sizes[k] = orbit[k].size();
  return sizes;
}

std::vector<std::string> bbht_disagreements(const Group& g, const RootSystem& rs) {
  const SubsetMask subsets = SubsetMask{1} << rs.rank;
  std::vector<std::string> out;
  for (SubsetMask k = 0; k < subsets; ++k) {
    const auto orbit = orbit_of_subset(g, rs, k);
    for (SubsetMask j = 0; j < subsets; ++j) {
      const bool member = std::binary_search(orbit.members.begin(), orbit.members.end(), j, subset_lex_less);
      if (member != conjugate_parabolics(g, j, k)) out.push_back(subset_to_string(j) + "~" + subset_to_string(k));
    }
  }
  return out;
}

}  // namespace coxlat::testing
