#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "coxlat/coxeter/group.hpp"
#include "coxlat/coxeter/parabolic.hpp"
#include "coxlat/coxeter/root_system.hpp"
#include "coxlat/identities/identities.hpp"
#include "oracles.hpp"

namespace coxlat {
namespace {

using testing::type_of;

struct Built {
  RootSystem rs;
  Group g;
};

Built build(const std::string& text) {
  RootSystem rs = build_root_system(type_of(text));
  Group g = Group::enumerate(rs);
  return {std::move(rs), std::move(g)};
}

SubsetMask mask(std::initializer_list<int> one_based) {
  SubsetMask k = 0;
  for (int i : one_based) k |= SubsetMask{1} << (i - 1);
  return k;
}

TEST(CoxeterType, RejectsInadmissibleRanks) {
  EXPECT_THROW(validate(make_type(Family::D, 3)), InvalidType);
  EXPECT_THROW(validate(make_type(Family::E, 9)), InvalidType);
  EXPECT_THROW(validate(make_type(Family::H, 5)), InvalidType);
  EXPECT_THROW(validate(dihedral_type(2)), InvalidType);
  EXPECT_THROW(validate(make_type(Family::B, 1)), InvalidType);
  EXPECT_NO_THROW(validate(make_type(Family::E, 8)));
}

TEST(RootSystem, PositiveRootCounts) {
  EXPECT_EQ(build_root_system(type_of("A3")).positive_count, 6u);
  EXPECT_EQ(build_root_system(type_of("F4")).positive_count, 24u);
  EXPECT_EQ(build_root_system(type_of("I2(7)")).positive_count, 7u);
  EXPECT_EQ(build_root_system(type_of("E6")).positive_count, 36u);
  EXPECT_EQ(build_root_system(type_of("H4")).positive_count, 60u);
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(build_root_system(make_type(Family::A, n)).positive_count, static_cast<std::size_t>(n * (n + 1) / 2));
}

TEST(RootSystem, ProductsWithDihedralFactorsAreRejected) {
  EXPECT_THROW(build_root_system(type_of("I2(5)xA1")), InvalidType);
}

TEST(RootSystem, GramIsPositiveDefinite) {
  for (const auto& t : testing::main_types()) {
    const RootSystem rs = build_root_system(t);
    if (!rs.has_geometry()) continue;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(rs.rank); ++k) {
      Matrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = rs.gram(i, j);
      EXPECT_GT(determinant(minor).sign(), 0) << t.name() << " minor " << k;
    }
  }
}

TEST(RootSystem, SimpleReflectionsPreserveFormAndRoots) {
  for (const char* name : {"B3", "H3", "F4", "D5"}) {
    const RootSystem rs = build_root_system(type_of(name));
    for (const auto& s : rs.simple_reflections) {
      for (std::size_t r = 0; r < rs.root_count(); ++r) {
        ASSERT_EQ(s[rs.negative_of(r)], rs.negative_of(s[r]));
        for (std::size_t q = 0; q < rs.positive_count; ++q)
          ASSERT_EQ(rs.form(rs.roots[s[r]], rs.roots[s[q]]), rs.form(rs.roots[r], rs.roots[q])) << name;
      }
    }
  }
}

TEST(Group, OrdersMatchClassicalFormulas) {
  for (const char* name : {"A3", "H3", "B4", "D4", "F4", "G2", "I2(9)", "A2xA1", "A1xB2"})
    EXPECT_EQ(BigInt(static_cast<unsigned long>(build(name).g.order())), type_of(name).expected_order()) << name;
  EXPECT_EQ(build("A3").g.order(), 24u);
  EXPECT_EQ(build("H3").g.order(), 120u);
  EXPECT_EQ(build("E6").g.order(), 51840u);
}

TEST(Group, CapAndE8Guard) {
  const RootSystem a6 = build_root_system(type_of("A6"));
  EXPECT_THROW(Group::enumerate(a6, 1000), CapExceeded);
  const RootSystem e8 = build_root_system(type_of("E8"));
  EXPECT_THROW(Group::enumerate(e8, 1'000'000'000), CapExceeded);
}

TEST(Group, ElementsPermuteRootsCompatiblyWithNegation) {
  const auto [rs, g] = build("B3");
  for (std::size_t w = 0; w < g.order(); ++w)
    for (std::size_t r = 0; r < rs.root_count(); ++r) ASSERT_EQ(g.apply(w, rs.negative_of(r)), rs.negative_of(g.apply(w, r)));
}

TEST(Group, ClosedUnderProductAndInverse) {
  const auto [rs, g] = build("H3");
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int i = 0; i < 500; ++i) {
    const std::size_t a = pick(rng), b = pick(rng);
    const std::size_t ab = g.multiply(a, b);
    EXPECT_EQ(g.multiply(ab, g.inverse(b)), a);
    EXPECT_EQ(g.det_sign(ab), g.det_sign(a) * g.det_sign(b));
  }
}

TEST(Group, DetSignEqualsMatrixDeterminant) {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2", "H3", "A2xA1"}) {
    const auto [rs, g] = build(name);
    for (std::size_t w = 0; w < g.order(); ++w)
      ASSERT_EQ(determinant(element_matrix(rs, g, w)), Scalar(g.det_sign(w))) << name << " element " << w;
  }
  const auto [rs, g] = build("F4");
  for (std::size_t w = 0; w < g.order(); w += 37)
    ASSERT_EQ(determinant(element_matrix(rs, g, w)), Scalar(g.det_sign(w)));
}

TEST(Parabolic, Examples) {
  EXPECT_EQ(parabolic(build("A2").g, 0).size(), 1u);
  EXPECT_EQ(parabolic(build("A2").g, mask({1})).size(), 2u);
  EXPECT_EQ(parabolic(build("B2").g, mask({1, 2})).size(), 8u);
  const auto [rs, g] = build("D5");
  EXPECT_EQ(parabolic(g, (SubsetMask{1} << 5) - 1).size(), g.order());
  EXPECT_EQ(parabolic(g, mask({3, 4, 5})).size(), 24u);
}

TEST(Orbits, Examples) {
  const auto a2 = build("A2");
  const auto o = orbit_of_subset(a2.g, a2.rs, mask({1}));
  EXPECT_EQ(o.size, 2u);
  EXPECT_EQ(o.members, (std::vector<SubsetMask>{mask({1}), mask({2})}));
  const auto i8 = build("I2(8)");
  for (SubsetMask k = 0; k < 4; ++k) EXPECT_EQ(orbit_of_subset(i8.g, i8.rs, k).size, 1u);
  const auto i9 = build("I2(9)");
  EXPECT_EQ(orbit_of_subset(i9.g, i9.rs, mask({2})).size, 2u);
}

TEST(Orbits, PartitionThePowerSet) {
  for (const char* name : {"A4", "B4", "D5", "F4", "H3", "E6", "A2xA1"}) {
    const auto [rs, g] = build(name);
    const auto p = subset_orbits(g, rs);
    std::vector<int> seen(std::size_t{1} << rs.rank, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < p.orbits.size(); ++i) {
      total += p.orbits[i].size;
      for (SubsetMask j : p.orbits[i].members) {
        ++seen[j];
        EXPECT_EQ(p.orbit_of[j], i);
      }
      const auto brute = orbit_of_subset(g, rs, p.orbits[i].representative);
      EXPECT_EQ(brute.members, p.orbits[i].members) << name;
      EXPECT_EQ(p.orbits[i].representative, p.orbits[i].members.front());
    }
    EXPECT_EQ(total, seen.size());
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; })) << name;
  }
}

TEST(Orbits, DCoordinateModelAgrees) {
  for (int n = 4; n <= 6; ++n) {
    const auto [rs, g] = build("D" + std::to_string(n));
    const auto oracle = testing::d_coordinate_orbit_sizes(n);
    const auto p = subset_orbits(g, rs);
    for (SubsetMask k = 0; k < oracle.size(); ++k)
      EXPECT_EQ(p.orbits[p.orbit_of[k]].size, oracle[k]) << "D" << n << " " << subset_to_string(k);
  }
}

TEST(Conjugacy, Examples) {
  const auto a2 = build("A2");
  EXPECT_TRUE(conjugate_parabolics(a2.g, mask({1}), mask({1})));
  EXPECT_TRUE(conjugate_parabolics(a2.g, mask({1}), mask({2})));
  const auto b2 = build("B2");
  EXPECT_FALSE(conjugate_parabolics(b2.g, mask({1}), mask({2})));
}

TEST(Conjugacy, AgreesWithSubsetEquivalenceOnRankAtMostFour) {
  for (const auto& t : testing::rank4_types()) {
    const RootSystem rs = build_root_system(t);
    const Group g = Group::enumerate(rs);
    EXPECT_EQ(testing::bbht_disagreements(g, rs), std::vector<std::string>{}) << t.name();
  }
}

TEST(Normalizer, Examples) {
  for (int m = 3; m <= 12; ++m) {
    const auto [rs, g] = build("I2(" + std::to_string(m) + ")");
    EXPECT_EQ(normalizer_index(g, rs, 0), 1u);
    EXPECT_EQ(normalizer_index(g, rs, 3), 1u);
  }
  // B3, short A1: |W_K| / |N_W(W_K)| = 1/8.
  const auto [rs, g] = build("B3");
  const std::size_t index = normalizer_index(g, rs, mask({3}));
  Rational ratio(2 * static_cast<long>(index), static_cast<long>(g.order()));
  ratio.canonicalize();
  EXPECT_EQ(ratio, Rational(1, 8));
  EXPECT_EQ(normalizer_index(g, rs, mask({1})), 6u);
}

TEST(FixedSpace, DimensionIsRankMinusSize) {
  for (const char* name : {"A3", "B4", "H4", "D5", "A2xA1"}) {
    const RootSystem rs = build_root_system(type_of(name));
    for (SubsetMask k = 0; k < (SubsetMask{1} << rs.rank); ++k)
      EXPECT_EQ(fixed_space(rs, k).dim(), static_cast<std::size_t>(rs.rank - subset_size(k)));
  }
  const RootSystem a2 = build_root_system(type_of("A2"));
  EXPECT_EQ(fixed_space(a2, 0), Subspace::full(2));
  EXPECT_EQ(fixed_space(a2, 3), Subspace::zero(2));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_subset_type(build_root_system(type_of("A3")), 0), "∅");
  EXPECT_EQ(classify_subset_type(build_root_system(type_of("A3")), mask({1, 3})), "A1+A1");
  EXPECT_EQ(classify_subset_type(build_root_system(type_of("F4")), mask({2, 3})), "B2");
  EXPECT_EQ(classify_subset_type(build_root_system(type_of("E6")), mask({1, 2, 3, 4, 5, 6})), "E6");
  EXPECT_EQ(classify_subset_type(build_root_system(type_of("D5")), mask({2, 3, 4, 5})), "D4");
  EXPECT_EQ(classify_subset_type(build_root_system(type_of("H4")), mask({1, 2, 4})), "I2(5)+A1");
  EXPECT_EQ(classify_subset_type(build_root_system(type_of("B4")), mask({1, 2, 4})), "A2+A1");
  EXPECT_EQ(classify_subset_type(build_root_system(type_of("A2xB2")), mask({1, 2, 3, 4})), "A2+B2");
}

TEST(Cosets, Examples) {
  const auto a1 = build("A1");
  EXPECT_EQ(coset_fixed_count(a1.g, 1, a1.g.simple_reflection(0)), 1u);
  const auto a2 = build("A2");
  const std::size_t s1 = a2.g.simple_reflection(0), s2 = a2.g.simple_reflection(1);
  const std::size_t rotation = a2.g.multiply(s1, s2);
  EXPECT_EQ(coset_fixed_count(a2.g, mask({1}), rotation), 0u);
  EXPECT_EQ(coset_fixed_count(a2.g, 0, s1), 0u);
  EXPECT_EQ(coset_fixed_count(a2.g, mask({1}), s1), 1u);
  EXPECT_EQ(coset_fixed_count(a2.g, mask({2}), s1), 1u);
  for (SubsetMask k = 0; k < 4; ++k)
    EXPECT_EQ(coset_fixed_count(a2.g, k, 0), a2.g.order() / parabolic(a2.g, k).size());
}

TEST(Cosets, TableAgreesWithDirectCount) {
  for (const char* name : {"A3", "B3", "H3"}) {
    const auto [rs, g] = build(name);
    for (SubsetMask k = 0; k < (SubsetMask{1} << rs.rank); ++k) {
      const auto table = coset_fixed_table(g, k);
      for (std::size_t w = 0; w < g.order(); w += 7)
        ASSERT_EQ(table[w], static_cast<std::int64_t>(coset_fixed_count(g, k, w))) << name << " " << k << " " << w;
    }
  }
}

TEST(DihedralModel, G2AgreesWithI2Of6) {
  const auto g2 = build("G2");
  const auto i6 = build("I2(6)");
  ASSERT_TRUE(g2.rs.has_geometry());
  ASSERT_FALSE(i6.rs.has_geometry());
  EXPECT_EQ(g2.g.order(), i6.g.order());
  EXPECT_EQ(g2.rs.positive_count, i6.rs.positive_count);
  for (SubsetMask k = 0; k < 4; ++k) {
    EXPECT_EQ(orbit_of_subset(g2.g, g2.rs, k).size, orbit_of_subset(i6.g, i6.rs, k).size);
    EXPECT_EQ(normalizer_index(g2.g, g2.rs, k), normalizer_index(i6.g, i6.rs, k));
    EXPECT_EQ(parabolic(g2.g, k).size(), parabolic(i6.g, k).size());
    auto tg = coset_fixed_table(g2.g, k), ti = coset_fixed_table(i6.g, k);
    std::sort(tg.begin(), tg.end());
    std::sort(ti.begin(), ti.end());
    EXPECT_EQ(tg, ti);
  }
  const Analysis ag = Analysis::build(type_of("G2"));
  const Analysis ai = Analysis::build(type_of("I2(6)"));
  for (SubsetMask k = 0; k < 4; ++k) EXPECT_EQ(ag.chi(k), ai.chi(k));
  EXPECT_EQ(ag.lattice().size(), ai.lattice().size());
}

TEST(Multiplicativity, ProductTypesFactor) {
  struct Case {
    const char* product;
    const char* left;
    const char* right;
  };
  for (const Case c : {Case{"A2xA1", "A2", "A1"}, Case{"A1xB2", "A1", "B2"}}) {
    const auto p = build(c.product), l = build(c.left), r = build(c.right);
    EXPECT_EQ(p.g.order(), l.g.order() * r.g.order());
    const int nl = l.rs.rank;
    for (SubsetMask k = 0; k < (SubsetMask{1} << p.rs.rank); ++k) {
      const SubsetMask kl = k & ((SubsetMask{1} << nl) - 1), kr = k >> nl;
      EXPECT_EQ(orbit_of_subset(p.g, p.rs, k).size,
                orbit_of_subset(l.g, l.rs, kl).size * orbit_of_subset(r.g, r.rs, kr).size);
      EXPECT_EQ(normalizer_index(p.g, p.rs, k), normalizer_index(l.g, l.rs, kl) * normalizer_index(r.g, r.rs, kr));
    }
  }
}

TEST(Subsets, ParseAndPrint) {
  EXPECT_EQ(parse_subset("1,3", 3), mask({1, 3}));
  EXPECT_EQ(parse_subset("", 3), 0u);
  EXPECT_EQ(subset_to_string(mask({1, 3})), "{1,3}");
  EXPECT_EQ(subset_to_string(0), "{}");
  EXPECT_THROW(parse_subset("4", 3), std::invalid_argument);
  EXPECT_THROW(parse_subset("0", 3), std::invalid_argument);
  EXPECT_THROW(parse_subset("a", 3), std::invalid_argument);
}

}  // namespace
}  // namespace coxlat
