#include "coxlat/coxeter/parabolic.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace coxlat {

int subset_size(SubsetMask k) { return std::popcount(k); }

std::vector<int> subset_indices(SubsetMask k) {
  std::vector<int> out;
  for (int i = 0; k != 0; ++i, k >>= 1)
    if (k & 1u) out.push_back(i);
  return out;
}

bool subset_lex_less(SubsetMask a, SubsetMask b) {
  const auto ia = subset_indices(a);
  const auto ib = subset_indices(b);
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::string subset_to_string(SubsetMask k) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_indices(k)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

SubsetMask parse_subset(const std::string& text, int rank) {
  SubsetMask k = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), ::isdigit))
      throw std::invalid_argument("malformed subset entry '" + item + "'");
    const int node = std::stoi(item);
    if (node < 1 || node > rank)
      throw std::invalid_argument("subset entry " + item + " is outside 1.." + std::to_string(rank));
    k |= SubsetMask{1} << (node - 1);
  }
  return k;
}

std::vector<std::size_t> parabolic(const Group& g, SubsetMask k) {
  std::vector<std::size_t> elements{g.identity()};
  std::vector<bool> seen(g.order(), false);
  seen[g.identity()] = true;
  const auto gens = subset_indices(k);
  for (std::size_t p = 0; p < elements.size(); ++p) {
    for (int i : gens) {
      const std::size_t next = g.left_multiply_simple(i, elements[p]);
      if (!seen[next]) {
        seen[next] = true;
        elements.push_back(next);
      }
    }
  }
  return elements;
}

namespace {

// Image of K under w when it lands inside the base.
std::optional<SubsetMask> image_in_base(const Group& g, std::size_t w, SubsetMask k) {
  SubsetMask image = 0;
  const auto pw = g.perm(w);
  for (int j : subset_indices(k)) {
    const int r = pw[static_cast<std::size_t>(j)];
    if (r >= g.rank()) return std::nullopt;
    image |= SubsetMask{1} << r;
  }
  return image;
}

SubsetOrbit make_orbit(std::vector<SubsetMask> members, const RootSystem& rs) {
  std::sort(members.begin(), members.end(), subset_lex_less);
  SubsetOrbit o;
  o.representative = members.front();
  o.size = members.size();
  o.members = std::move(members);
  o.type_label = classify_subset_type(rs, o.representative);
  return o;
}

bool report_order(SubsetMask a, SubsetMask b) {
  if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
  return subset_lex_less(a, b);
}

}  // namespace

SubsetOrbit orbit_of_subset(const Group& g, const RootSystem& rs, SubsetMask k) {
  std::vector<bool> hit(std::size_t{1} << rs.rank, false);
  for (std::size_t w = 0; w < g.order(); ++w)
    if (const auto image = image_in_base(g, w, k)) hit[*image] = true;
  std::vector<SubsetMask> members;
  for (SubsetMask j = 0; j < hit.size(); ++j)
    if (hit[j]) members.push_back(j);
  return make_orbit(std::move(members), rs);
}

SubsetPartition subset_orbits(const Group& g, const RootSystem& rs) {
  const std::size_t count = std::size_t{1} << rs.rank;
  std::vector<std::uint32_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<int> domain;
  std::vector<int> target;
  for (std::size_t w = 0; w < g.order(); ++w) {
    const auto pw = g.perm(w);
    SubsetMask lands = 0;
    for (int j = 0; j < rs.rank; ++j)
      if (pw[static_cast<std::size_t>(j)] < rs.rank) lands |= SubsetMask{1} << j;
    // Every K inside `lands` maps into the base.
    for (SubsetMask k = lands;; k = (k - 1) & lands) {
      SubsetMask image = 0;
      for (SubsetMask bits = k; bits != 0; bits &= bits - 1) {
        const int j = std::countr_zero(bits);
        image |= SubsetMask{1} << pw[static_cast<std::size_t>(j)];
      }
      const auto a = find(k), b = find(image);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
      if (k == 0) break;
    }
  }

  std::vector<std::vector<SubsetMask>> classes(count);
  for (SubsetMask k = 0; k < count; ++k) classes[find(k)].push_back(k);

  SubsetPartition part;
  for (auto& members : classes)
    if (!members.empty()) part.orbits.push_back(make_orbit(std::move(members), rs));
  std::sort(part.orbits.begin(), part.orbits.end(), [](const SubsetOrbit& a, const SubsetOrbit& b) {
    return report_order(a.representative, b.representative);
  });
  part.orbit_of.assign(count, 0);
  for (std::uint32_t o = 0; o < part.orbits.size(); ++o)
    for (SubsetMask k : part.orbits[o].members) part.orbit_of[k] = o;
  return part;
}

bool conjugate_parabolics(const Group& g, SubsetMask j, SubsetMask k) {
  const auto wj = parabolic(g, j);
  const auto wk = parabolic(g, k);
  if (wj.size() != wk.size()) return false;
  std::vector<bool> in_k(g.order(), false);
  for (auto x : wk) in_k[x] = true;
  const auto gens = subset_indices(j);
  for (std::size_t w = 0; w < g.order(); ++w) {
    // w W_J w^-1 is inside W_K iff every conjugated generator is; equal
    // orders then give equality.
    const bool inside = std::all_of(gens.begin(), gens.end(), [&](int i) {
      return in_k[g.conjugate(w, g.simple_reflection(i))];
    });
    if (inside) return true;
  }
  return false;
}

std::vector<std::size_t> parabolic_positive_roots(const RootSystem& rs, SubsetMask k) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rs.positive_count; ++r)
    if ((rs.support[r] & ~k) == 0) out.push_back(r);
  return out;
}

std::size_t normalizer_index(const Group& g, const RootSystem& rs, SubsetMask k) {
  const auto phi_k = parabolic_positive_roots(rs, k);
  std::size_t stabilizer = 0;
  for (std::size_t w = 0; w < g.order(); ++w) {
    const auto pw = g.perm(w);
    const bool keeps = std::all_of(phi_k.begin(), phi_k.end(),
                                   [&](std::size_t r) { return (rs.support[pw[r]] & ~k) == 0; });
    if (keeps) ++stabilizer;
  }
  if (stabilizer == 0 || g.order() % stabilizer != 0)
    throw std::logic_error("normalizer order does not divide |W|");
  return g.order() / stabilizer;
}

Subspace fixed_space(const RootSystem& rs, SubsetMask k) {
  if (!rs.has_geometry()) throw InvalidType("dihedral model has no coordinate realization");
  const auto n = static_cast<std::size_t>(rs.rank);
  Matrix functionals(0, n);
  for (int i : subset_indices(k)) functionals.append_row(rs.gram.row(static_cast<std::size_t>(i)));
  return Subspace::kernel(functionals);
}

namespace {

Factor classify_component(const RootSystem& rs, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  auto label = [&](int a, int b) { return rs.coxeter[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  auto unknown = [&]() -> Factor { throw std::logic_error("unrecognized Coxeter graph component"); };

  if (k == 1) return {Family::A, 1, 0};
  std::vector<std::vector<int>> adj(nodes.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && label(nodes[a], nodes[b]) >= 3) adj[a].push_back(b);

  if (k == 2) {
    const int m = label(nodes[0], nodes[1]);
    if (m == 3) return {Family::A, 2, 0};
    if (m == 4) return {Family::B, 2, 0};
    if (m == 6) return {Family::G, 2, 0};
    return {Family::I, 2, m};
  }

  const auto branch = std::find_if(adj.begin(), adj.end(), [](const auto& v) { return v.size() >= 3; });
  if (branch != adj.end()) {
    const int center = static_cast<int>(branch - adj.begin());
    if (branch->size() != 3) return unknown();
    std::vector<int> arms;
    for (int start : *branch) {
      if (label(nodes[center], nodes[start]) != 3) return unknown();
      int prev = center, cur = start, len = 1;
      while (true) {
        int next = -1;
        for (int x : adj[cur])
          if (x != prev) next = x;
        if (next < 0) break;
        if (adj[cur].size() > 2 || label(nodes[cur], nodes[next]) != 3) return unknown();
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, k, 0};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, k, 0};
    return unknown();
  }

  // Path: walk from an endpoint collecting edge labels.
  int start = 0;
  while (adj[start].size() != 1) ++start;
  std::vector<int> labels;
  for (int prev = -1, cur = start;;) {
    int next = -1;
    for (int x : adj[cur])
      if (x != prev) next = x;
    if (next < 0) break;
    labels.push_back(label(nodes[cur], nodes[next]));
    prev = cur;
    cur = next;
  }
  std::vector<std::size_t> special;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != 3) special.push_back(i);
  if (special.empty()) return {Family::A, k, 0};
  if (special.size() != 1) return unknown();
  const std::size_t pos = special[0];
  const bool at_end = pos == 0 || pos + 1 == labels.size();
  const int m = labels[pos];
  if (m == 4 && at_end) return {Family::B, k, 0};
  if (m == 4 && k == 4) return {Family::F, 4, 0};
  if (m == 5 && at_end && (k == 3 || k == 4)) return {Family::H, k, 0};
  return unknown();
}

}  // namespace

std::vector<ComponentType> classify_subset_components(const RootSystem& rs, SubsetMask k) {
  std::vector<ComponentType> comps;
  SubsetMask left = k;
  while (left != 0) {
    const int seed = std::countr_zero(left);
    SubsetMask comp = SubsetMask{1} << seed;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int b : subset_indices(k)) {
        if ((comp >> b) & 1u) continue;
        if (rs.coxeter[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 3) {
          comp |= SubsetMask{1} << b;
          queue.push_back(b);
        }
      }
    }
    comps.push_back({classify_component(rs, subset_indices(comp)), comp});
    left &= ~comp;
  }
  std::stable_sort(comps.begin(), comps.end(), [](const ComponentType& a, const ComponentType& b) {
    if (a.factor.rank != b.factor.rank) return a.factor.rank > b.factor.rank;
    return a.factor.name() < b.factor.name();
  });
  return comps;
}

std::string classify_subset_type(const RootSystem& rs, SubsetMask k) {
  if (k == 0) return "∅";
  std::string out;
  for (const auto& c : classify_subset_components(rs, k)) {
    if (!out.empty()) out += "+";
    out += c.factor.name();
  }
  return out;
}

namespace {

// Minimal (in enumeration order) representative of every left coset.
std::vector<std::size_t> coset_representatives(const Group& g, const std::vector<std::size_t>& wk) {
  std::vector<bool> covered(g.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (covered[v]) continue;
    reps.push_back(v);
    for (auto u : wk) covered[g.multiply(v, u)] = true;
  }
  return reps;
}

}  // namespace

std::size_t coset_fixed_count(const Group& g, SubsetMask k, std::size_t w) {
  const auto wk = parabolic(g, k);
  std::vector<bool> in_k(g.order(), false);
  for (auto x : wk) in_k[x] = true;
  std::size_t fixed = 0;
  for (auto v : coset_representatives(g, wk)) {
    // w v W_K = v W_K  <=>  v^-1 w v in W_K
    if (in_k[g.multiply(g.inverse(v), g.multiply(w, v))]) ++fixed;
  }
  return fixed;
}

std::vector<std::int64_t> coset_fixed_table(const Group& g, SubsetMask k) {
  const auto wk = parabolic(g, k);
  std::vector<std::int64_t> f(g.order(), 0);
  for (auto v : coset_representatives(g, wk))
    for (auto u : wk) ++f[g.conjugate(v, u)];
  return f;
}

}  // namespace coxlat
