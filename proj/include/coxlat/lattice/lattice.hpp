#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxlat/coxeter/root_system.hpp"
#include "coxlat/exact/linalg.hpp"
#include "coxlat/exact/polynomial.hpp"

namespace coxlat {

/// One entry of a sparse Moebius row: (node index, mu(X, node)).
using MoebiusEntry = std::pair<std::uint32_t, std::int64_t>;

/// Intersection lattice of the reflection arrangement, ordered by reverse
/// inclusion (X <= Y iff Y is a subspace of X).
///
/// Hyperplane h is the reflecting hyperplane of positive root h. Each node
/// carries the set H(Y) of hyperplanes containing it, so X <= Y iff
/// H(X) is a subset of H(Y). Nodes are sorted by decreasing dimension; node
/// 0 is V and the last node is the origin.
class IntersectionLattice {
 public:
  /// Level-by-level construction from V by intersecting with hyperplanes.
  /// The dihedral model yields the closed form (V, m lines, origin).
  static IntersectionLattice build(const RootSystem& rs);

  IntersectionLattice(IntersectionLattice&&) noexcept = default;
  IntersectionLattice& operator=(IntersectionLattice&&) noexcept = default;

  std::size_t size() const { return dims_.size(); }
  int rank() const { return rank_; }
  std::size_t hyperplane_count() const { return hyperplane_count_; }
  bool has_geometry() const { return !spaces_.empty(); }

  std::size_t top() const { return 0; }
  std::size_t bottom() const { return size() - 1; }
  int dim(std::size_t x) const { return dims_[x]; }
  /// Geometric model only.
  const Subspace& space(std::size_t x) const;

  std::span<const std::uint64_t> hyperplanes(std::size_t x) const {
    return {hyper_.data() + x * words_, words_};
  }
  std::size_t hyperplane_words() const { return words_; }
  bool contains_hyperplane(std::size_t x, std::size_t h) const {
    return (hyper_[x * words_ + (h >> 6)] >> (h & 63)) & 1u;
  }

  bool leq(std::size_t x, std::size_t y) const;
  /// Nodes Y with X <= Y, ascending.
  std::vector<std::size_t> upper_set(std::size_t x) const;
  std::vector<std::size_t> count_by_dim() const;

  std::optional<std::size_t> find(std::span<const std::uint64_t> hyperplane_set) const;
  std::optional<std::size_t> find(const Subspace& s) const;

  /// mu(X, Y); zero when X is not <= Y.
  std::int64_t moebius(std::size_t x, std::size_t y) const;
  /// Nonzero entries of mu(X, .) in ascending node order, computed on first
  /// use (thread-safe).
  std::span<const MoebiusEntry> moebius_row(std::size_t x) const;

 private:
  IntersectionLattice() = default;
  void finish_order();
  std::string hyper_key(std::span<const std::uint64_t> set) const;

  int rank_ = 0;
  std::size_t hyperplane_count_ = 0;
  std::size_t words_ = 1;
  std::vector<int> dims_;
  std::vector<Subspace> spaces_;
  std::vector<std::uint64_t> hyper_;
  std::unordered_map<std::string, std::size_t> by_hyper_;
  std::unordered_map<std::string, std::size_t> by_space_;

  struct LazyRow {
    std::once_flag once;
    std::vector<MoebiusEntry> entries;
  };
  std::unique_ptr<LazyRow[]> rows_;
};

/// chi(L^X, t) = sum over Y >= X of mu(X, Y) t^dim(Y).
IntPolynomial char_poly_upper(const IntersectionLattice& lat, std::size_t x);

/// sum over Y in L of chi(L^Y, t); equals t^n for a reflection arrangement.
IntPolynomial sum_identity_check(const IntersectionLattice& lat, unsigned threads = 1);

/// Integer roots of chi(L, t), ascending with multiplicity. Throws
/// std::logic_error if chi does not split over the integers.
std::vector<long> exponents(const IntersectionLattice& lat);

/// Hyperplanes containing Fix(W_K): the positive roots of the parabolic
/// subsystem, as a bitset of lat.hyperplane_words() words.
std::vector<std::uint64_t> fix_hyperplanes(const RootSystem& rs, SubsetMask k, std::size_t words);

/// Node of Fix(W_K). For the geometric model the node found from the
/// hyperplane set must also match the kernel computation of fixed_space.
std::size_t fix_node(const IntersectionLattice& lat, const RootSystem& rs, SubsetMask k);

}  // namespace coxlat
