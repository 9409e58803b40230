#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coxlat/coxeter/group.hpp"
#include "coxlat/coxeter/root_system.hpp"
#include "coxlat/exact/linalg.hpp"

namespace coxlat {

int subset_size(SubsetMask k);
/// Sorted 0-based indices of the simple roots in k.
std::vector<int> subset_indices(SubsetMask k);
/// Lexicographic order on the sorted index lists.
bool subset_lex_less(SubsetMask a, SubsetMask b);
/// "{1,3}" with 1-based Bourbaki node numbers; "{}" for the empty set.
std::string subset_to_string(SubsetMask k);
/// Inverse of the 1-based list syntax "1,3"; throws std::invalid_argument.
SubsetMask parse_subset(const std::string& text, int rank);

/// Elements of W_K, identity first.
std::vector<std::size_t> parabolic(const Group& g, SubsetMask k);

/// The class lambda(K) = { w(K) : w in W, w(K) subset of the base }.
struct SubsetOrbit {
  /// Lexicographically smallest member.
  SubsetMask representative = 0;
  /// Sorted lexicographically.
  std::vector<SubsetMask> members;
  std::size_t size = 0;
  std::string type_label;
};

/// Brute force over every w in W.
SubsetOrbit orbit_of_subset(const Group& g, const RootSystem& rs, SubsetMask k);

/// Every orbit of subsets of the base at once. Orbits are ordered by
/// (|K|, lexicographic representative).
struct SubsetPartition {
  std::vector<SubsetOrbit> orbits;
  /// orbit_of[K] indexes orbits.
  std::vector<std::uint32_t> orbit_of;
};
SubsetPartition subset_orbits(const Group& g, const RootSystem& rs);

/// True iff w W_J w^-1 = W_K for some w in W.
bool conjugate_parabolics(const Group& g, SubsetMask j, SubsetMask k);

/// Positive roots in the span of K (the positive part of the root
/// subsystem of W_K).
std::vector<std::size_t> parabolic_positive_roots(const RootSystem& rs, SubsetMask k);

/// |W| / |N_W(W_K)|, with N_W(W_K) the setwise stabilizer of Phi_K.
std::size_t normalizer_index(const Group& g, const RootSystem& rs, SubsetMask k);

/// Intersection of the reflecting hyperplanes of the simple roots in K.
/// Geometric model only.
Subspace fixed_space(const RootSystem& rs, SubsetMask k);

/// Irreducible component of a Coxeter graph, as found by
/// classify_subset_components.
struct ComponentType {
  Factor factor;
  SubsetMask nodes = 0;
};
/// Components of the Coxeter graph induced on K, sorted by rank
/// (descending) then name.
std::vector<ComponentType> classify_subset_components(const RootSystem& rs, SubsetMask k);
/// "A2+A1", "B2", "∅".
std::string classify_subset_type(const RootSystem& rs, SubsetMask k);

/// Number of left cosets v W_K with w v W_K = v W_K, counted directly over
/// one minimal representative per coset.
std::size_t coset_fixed_count(const Group& g, SubsetMask k, std::size_t w);

/// f_K(w) for every w at once: each coset v W_K is fixed exactly by the
/// elements of v W_K v^-1.
std::vector<std::int64_t> coset_fixed_table(const Group& g, SubsetMask k);

}  // namespace coxlat
