#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coxlat/coxeter/root_system.hpp"

namespace coxlat {

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

/// W fully enumerated as permutations of the root list.
///
/// Elements are numbered in breadth-first order from the identity (element
/// 0) under left multiplication by simple reflections, so indices are
/// non-decreasing in length. An element is determined by the images of the
/// simple roots, which serve as the lookup key.
class Group {
 public:
  /// Throws CapExceeded when |W| would exceed cap, and always for E8.
  static Group enumerate(const RootSystem& rs, std::size_t cap = kDefaultEnumerationCap);

  std::size_t order() const { return det_.size(); }
  int rank() const { return rank_; }
  std::size_t root_count() const { return root_count_; }

  std::span<const std::uint8_t> perm(std::size_t w) const {
    return {perms_.data() + w * root_count_, root_count_};
  }
  std::uint8_t apply(std::size_t w, std::size_t root) const { return perms_[w * root_count_ + root]; }
  /// det(w) = (-1)^length(w).
  int det_sign(std::size_t w) const { return det_[w]; }

  std::size_t identity() const { return 0; }
  std::size_t simple_reflection(int i) const { return left_mult_[static_cast<std::size_t>(i)][0]; }
  std::size_t left_multiply_simple(int i, std::size_t w) const {
    return left_mult_[static_cast<std::size_t>(i)][w];
  }
  /// Index of a o b (apply b first).
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// v u v^-1
  std::size_t conjugate(std::size_t v, std::size_t u) const;

  std::optional<std::size_t> find(std::span<const std::uint8_t> perm) const;
  /// Composition of two root permutations, a o b.
  RootPerm compose(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) const;

 private:
  struct Key {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    friend bool operator==(const Key&, const Key&) = default;
  };

  static std::uint64_t hash(const Key& k);
  Key key_of_images(const std::uint8_t* images) const;
  std::optional<std::size_t> lookup(const Key& k) const;
  std::size_t lookup_or_throw(const Key& k) const;
  void insert_slot(const Key& k, std::uint32_t index);
  void rehash(std::size_t capacity);

  int rank_ = 0;
  std::size_t root_count_ = 0;
  std::vector<std::uint8_t> perms_;
  std::vector<std::int8_t> det_;
  std::vector<Key> keys_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::vector<std::uint32_t>> left_mult_;
  std::vector<std::uint32_t> inverse_;
};

/// Matrix of w in the simple-root basis (column j = coordinates of w(a_j)).
/// Geometric model only.
Matrix element_matrix(const RootSystem& rs, const Group& g, std::size_t w);

}  // namespace coxlat
