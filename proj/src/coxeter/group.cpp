#include "coxlat/coxeter/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coxlat/kernels/kernels.hpp"

namespace coxlat {

namespace {
constexpr std::uint32_t kEmptySlot = std::numeric_limits<std::uint32_t>::max();

bool contains_e8(const CoxeterType& t) {
  return std::any_of(t.factors.begin(), t.factors.end(),
                     [](const Factor& f) { return f.family == Family::E && f.rank == 8; });
}
}  // namespace

std::uint64_t Group::hash(const Key& k) {
  // splitmix64 finalizer over both halves
  std::uint64_t x = k.lo ^ (k.hi * 0x9E3779B97F4A7C15ull);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

Group::Key Group::key_of_images(const std::uint8_t* images) const {
  Key k;
  for (int j = 0; j < rank_; ++j) {
    const std::uint64_t b = images[j];
    if (j < 8) {
      k.lo |= b << (8 * j);
    } else {
      k.hi |= b << (8 * (j - 8));
    }
  }
  return k;
}

std::optional<std::size_t> Group::lookup(const Key& k) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(k) & mask;; s = (s + 1) & mask) {
    const std::uint32_t idx = slots_[s];
    if (idx == kEmptySlot) return std::nullopt;
    if (keys_[idx] == k) return idx;
  }
}

std::size_t Group::lookup_or_throw(const Key& k) const {
  const auto idx = lookup(k);
  if (!idx) throw std::logic_error("group element not found; enumeration is incomplete");
  return *idx;
}

void Group::insert_slot(const Key& k, std::uint32_t index) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(k) & mask;
  while (slots_[s] != kEmptySlot) s = (s + 1) & mask;
  slots_[s] = index;
}

void Group::rehash(std::size_t capacity) {
  std::size_t size = 16;
  while (size < 2 * capacity) size <<= 1;
  slots_.assign(size, kEmptySlot);
  for (std::size_t i = 0; i < keys_.size(); ++i) insert_slot(keys_[i], static_cast<std::uint32_t>(i));
}

Group Group::enumerate(const RootSystem& rs, std::size_t cap) {
  if (contains_e8(rs.type)) throw CapExceeded("E8 exceeds supported scale");
  const BigInt expected = rs.type.expected_order();
  if (expected > BigInt(static_cast<unsigned long>(cap))) {
    throw CapExceeded("|W(" + rs.type.name() + ")| = " + expected.get_str() +
                      " exceeds the enumeration cap of " + std::to_string(cap));
  }

  Group g;
  g.rank_ = rs.rank;
  g.root_count_ = rs.root_count();
  const std::size_t R = g.root_count_;
  const std::size_t expected_order = expected.get_ui();

  g.perms_.reserve(expected_order * R);
  g.det_.reserve(expected_order);
  g.keys_.reserve(expected_order);
  g.rehash(expected_order);
  g.left_mult_.assign(static_cast<std::size_t>(rs.rank), {});
  for (auto& lm : g.left_mult_) lm.reserve(expected_order);

  std::vector<std::uint8_t> id(R);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  g.perms_.insert(g.perms_.end(), id.begin(), id.end());
  g.det_.push_back(1);
  g.keys_.push_back(g.key_of_images(id.data()));
  g.insert_slot(g.keys_.back(), 0);

  std::uint8_t images[16];
  for (std::size_t p = 0; p < g.order(); ++p) {
    for (int i = 0; i < rs.rank; ++i) {
      const auto& s = rs.simple_reflections[static_cast<std::size_t>(i)];
      const std::uint8_t* wp = g.perms_.data() + p * R;
      for (int j = 0; j < rs.rank; ++j) images[j] = s[wp[j]];
      const Key k = g.key_of_images(images);
      std::size_t idx;
      if (const auto found = g.lookup(k)) {
        idx = *found;
      } else {
        idx = g.order();
        if (idx >= cap) throw CapExceeded("group enumeration exceeded the cap of " + std::to_string(cap));
        if (2 * (idx + 1) > g.slots_.size()) g.rehash(2 * (idx + 1));
        g.perms_.resize(g.perms_.size() + R);
        // perms_ may have reallocated; recompute the source pointer.
        kernels::gather_u8(g.perms_.data() + idx * R, s.data(), R, g.perms_.data() + p * R, R);
        g.det_.push_back(static_cast<std::int8_t>(-g.det_[p]));
        g.keys_.push_back(k);
        g.insert_slot(k, static_cast<std::uint32_t>(idx));
      }
      g.left_mult_[static_cast<std::size_t>(i)].push_back(static_cast<std::uint32_t>(idx));
    }
  }
  if (BigInt(static_cast<unsigned long>(g.order())) != expected) {
    throw std::logic_error("enumerated order " + std::to_string(g.order()) +
                           " differs from the classical order " + expected.get_str());
  }

  g.inverse_.resize(g.order());
  std::vector<std::uint8_t> inv(R);
  for (std::size_t w = 0; w < g.order(); ++w) {
    const auto pw = g.perm(w);
    for (std::size_t r = 0; r < R; ++r) inv[pw[r]] = static_cast<std::uint8_t>(r);
    g.inverse_[w] = static_cast<std::uint32_t>(g.lookup_or_throw(g.key_of_images(inv.data())));
  }
  return g;
}

std::size_t Group::multiply(std::size_t a, std::size_t b) const {
  std::uint8_t images[16];
  const auto pa = perm(a);
  const auto pb = perm(b);
  for (int j = 0; j < rank_; ++j) images[j] = pa[pb[j]];
  return lookup_or_throw(key_of_images(images));
}

std::size_t Group::conjugate(std::size_t v, std::size_t u) const {
  std::uint8_t images[16];
  const auto pv = perm(v);
  const auto pu = perm(u);
  const auto pvi = perm(inverse_[v]);
  for (int j = 0; j < rank_; ++j) images[j] = pv[pu[pvi[j]]];
  return lookup_or_throw(key_of_images(images));
}

std::optional<std::size_t> Group::find(std::span<const std::uint8_t> p) const {
  if (p.size() != root_count_) return std::nullopt;
  const auto idx = lookup(key_of_images(p.data()));
  if (!idx) return std::nullopt;
  const auto stored = perm(*idx);
  if (!std::equal(stored.begin(), stored.end(), p.begin())) return std::nullopt;
  return idx;
}

RootPerm Group::compose(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) const {
  RootPerm out(b.size());
  kernels::gather_u8(out.data(), a.data(), a.size(), b.data(), b.size());
  return out;
}

Matrix element_matrix(const RootSystem& rs, const Group& g, std::size_t w) {
  if (!rs.has_geometry()) throw InvalidType("dihedral model has no coordinate realization");
  const auto n = static_cast<std::size_t>(rs.rank);
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& col = rs.roots[g.apply(w, j)];
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace coxlat
