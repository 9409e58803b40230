#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coxlat/coxeter/coxeter_type.hpp"
#include "coxlat/exact/linalg.hpp"

namespace coxlat {

/// Bit i set <=> simple root i (0-based) is in the subset.
using SubsetMask = std::uint32_t;

/// A root permutation: entry r is the index of the image of root r.
using RootPerm = std::vector<std::uint8_t>;

/// Root system of a finite Coxeter group in its essential (rank-dimensional)
/// realization.
///
/// Root indexing: 0..N-1 are the positive roots ordered by height, the first
/// n of them the simple roots in Bourbaki order; root r + N is -(root r).
///
/// Geometric model: coordinates are taken in the simple-root basis and the
/// invariant form is the Gram matrix. Dihedral model (I2(m)): roots are the
/// 2m unit vectors at angles k*pi/m and only the combinatorial data
/// (reflections, supports) is kept, so no Scalar for cos(pi/m) is needed.
struct RootSystem {
  CoxeterType type;
  int rank = 0;
  bool dihedral_model = false;
  std::vector<std::vector<int>> coxeter;
  /// Invariant form on the simple-root basis (empty for the dihedral model).
  Matrix gram;
  /// Coordinates of every root in the simple-root basis (geometric model).
  std::vector<std::vector<Scalar>> roots;
  /// Simple roots with a nonzero coefficient in each root.
  std::vector<SubsetMask> support;
  std::size_t positive_count = 0;
  /// Action of each simple reflection on root indices.
  std::vector<RootPerm> simple_reflections;

  std::size_t root_count() const { return 2 * positive_count; }
  bool has_geometry() const { return !dihedral_model; }
  std::size_t negative_of(std::size_t r) const {
    return r < positive_count ? r + positive_count : r - positive_count;
  }
  std::size_t positive_of(std::size_t r) const {
    return r < positive_count ? r : r - positive_count;
  }
  bool is_positive(std::size_t r) const { return r < positive_count; }

  /// B(x, y) for simple-root coordinate vectors.
  Scalar form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  /// Row r is the functional x -> B(root r, x) for positive root r; the
  /// kernel of row r is the reflecting hyperplane of root r.
  Matrix hyperplane_functionals() const;

  /// Sum of coordinates (geometric) or position in the dihedral height
  /// order.
  Scalar height(std::size_t r) const;
};

/// Builds the root system by closing the simple roots under the simple
/// reflections. Throws InvalidType for inadmissible types and for products
/// that contain an I2(m) factor.
RootSystem build_root_system(const CoxeterType& type);

/// Gram matrix of an irreducible geometric factor (Bourbaki numbering).
Matrix factor_gram(const Factor& f);

}  // namespace coxlat
