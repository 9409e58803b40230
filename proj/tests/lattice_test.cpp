#include <gtest/gtest.h>

#include "coxlat/coxeter/parabolic.hpp"
#include "coxlat/lattice/lattice.hpp"
#include "oracles.hpp"

namespace coxlat {
namespace {

using testing::type_of;

IntersectionLattice lattice_of(const std::string& text) { return IntersectionLattice::build(build_root_system(type_of(text))); }

IntPolynomial roots_poly(std::initializer_list<long> roots) {
  std::vector<BigInt> r;
  for (long x : roots) r.emplace_back(x);
  return IntPolynomial::from_roots(r);
}

TEST(Lattice, NodeCounts) {
  EXPECT_EQ(lattice_of("B2").size(), 6u);
  EXPECT_EQ(lattice_of("A3").size(), 15u);
  for (int m = 3; m <= 12; ++m) EXPECT_EQ(lattice_of("I2(" + std::to_string(m) + ")").size(), static_cast<std::size_t>(m + 2));
  EXPECT_EQ(lattice_of("G2").size(), 8u);
}

TEST(Lattice, TypeAMatchesPartitionLattice) {
  for (int n = 2; n <= 6; ++n) {
    const auto lat = lattice_of("A" + std::to_string(n - 1));
    EXPECT_EQ(lat.size(), testing::bell(n)) << "n=" << n;
    const auto by_dim = lat.count_by_dim();
    // A flat of dimension d corresponds to a partition into d + 1 blocks.
    for (int d = 0; d < n; ++d)
      EXPECT_EQ(by_dim[static_cast<std::size_t>(d)], testing::stirling2(n, d + 1)) << "n=" << n << " d=" << d;
  }
  EXPECT_EQ(testing::bell(6), 203u);
}

TEST(Lattice, StructureInvariants) {
  for (const char* name : {"B3", "H3", "D4"}) {
    const auto lat = lattice_of(name);
    const RootSystem rs = build_root_system(type_of(name));
    EXPECT_EQ(lat.dim(lat.top()), rs.rank);
    EXPECT_EQ(lat.dim(lat.bottom()), 0);
    for (std::size_t x = 0; x < lat.size(); ++x) {
      EXPECT_TRUE(lat.leq(lat.top(), x));
      EXPECT_TRUE(lat.leq(x, lat.bottom()));
      EXPECT_EQ(lat.find(lat.space(x)), x);
      EXPECT_EQ(lat.find(lat.hyperplanes(x)), x);
      for (std::size_t y = 0; y < lat.size(); ++y) {
        // Reverse inclusion, checked on the subspaces themselves.
        ASSERT_EQ(lat.leq(x, y), lat.space(x).contains(lat.space(y))) << name;
        if (lat.leq(x, y) && x != y) EXPECT_LT(x, y);
      }
    }
    for (std::size_t x = 0; x < lat.size(); ++x)
      for (std::size_t y = 0; y < lat.size(); ++y) {
        const auto meet = intersect_subspaces(lat.space(x), lat.space(y));
        ASSERT_TRUE(lat.find(meet).has_value()) << name;
      }
  }
}

TEST(Lattice, FixNodesMatchFixedSpaces) {
  for (const char* name : {"A4", "B3", "H4", "E6", "A2xA1"}) {
    const RootSystem rs = build_root_system(type_of(name));
    const auto lat = IntersectionLattice::build(rs);
    for (SubsetMask k = 0; k < (SubsetMask{1} << rs.rank); ++k)
      EXPECT_EQ(lat.space(fix_node(lat, rs, k)), fixed_space(rs, k));
  }
}

TEST(Moebius, Examples) {
  const auto a2 = lattice_of("A2");
  EXPECT_EQ(a2.moebius(a2.top(), a2.top()), 1);
  EXPECT_EQ(a2.moebius(a2.top(), a2.bottom()), 2);
  for (int m = 3; m <= 9; ++m) {
    const auto lat = lattice_of("I2(" + std::to_string(m) + ")");
    EXPECT_EQ(lat.moebius(lat.top(), lat.bottom()), m - 1);
    for (std::size_t line = 1; line <= static_cast<std::size_t>(m); ++line) EXPECT_EQ(lat.moebius(lat.top(), line), -1);
  }
  const auto b2 = lattice_of("B2");
  EXPECT_EQ(b2.moebius(b2.top(), b2.bottom()), 3);
  EXPECT_EQ(b2.moebius(1, 2), 0);
}

TEST(Moebius, AxiomHoldsOnEveryInterval) {
  for (const auto& t : testing::rank4_types()) {
    const auto lat = IntersectionLattice::build(build_root_system(t));
    for (std::size_t x = 0; x < lat.size(); ++x) {
      ASSERT_EQ(lat.moebius(x, x), 1);
      for (std::size_t y : lat.upper_set(x)) {
        if (y == x) continue;
        std::int64_t s = 0;
        for (std::size_t z : lat.upper_set(x))
          if (lat.leq(z, y)) s += lat.moebius(z, y);
        ASSERT_EQ(s, 0) << t.name() << " " << x << " " << y;
      }
    }
  }
}

TEST(Moebius, NaiveRecursionAgreesOnRankAtMostFour) {
  for (const auto& t : testing::rank4_types()) {
    const auto lat = IntersectionLattice::build(build_root_system(t));
    for (std::size_t x = 0; x < lat.size(); ++x)
      for (std::size_t y = 0; y < lat.size(); ++y) {
        if (!lat.leq(x, y)) {
          ASSERT_EQ(lat.moebius(x, y), 0);
          continue;
        }
        ASSERT_EQ(lat.moebius(x, y), testing::naive_moebius(lat, x, y)) << t.name() << " " << x << " " << y;
      }
  }
}

TEST(CharPoly, Examples) {
  const auto a3 = lattice_of("A3");
  EXPECT_EQ(char_poly_upper(a3, a3.top()), roots_poly({1, 2, 3}));
  EXPECT_EQ(char_poly_upper(a3, a3.bottom()), IntPolynomial(1));
  const auto b2 = lattice_of("B2");
  EXPECT_EQ(char_poly_upper(b2, b2.top()), roots_poly({1, 3}));
  for (int m = 3; m <= 12; ++m) {
    const auto lat = lattice_of("I2(" + std::to_string(m) + ")");
    EXPECT_EQ(char_poly_upper(lat, lat.top()), roots_poly({1, m - 1}));
  }
}

TEST(CharPoly, MonicAndVanishesAtOne) {
  for (const char* name : {"A4", "B4", "D4", "F4", "H3", "G2", "I2(7)"}) {
    const auto lat = lattice_of(name);
    for (std::size_t x = 0; x < lat.size(); ++x) {
      const auto chi = char_poly_upper(lat, x);
      ASSERT_EQ(chi.degree(), lat.dim(x));
      ASSERT_EQ(chi.leading(), 1);
      if (lat.dim(x) >= 1) ASSERT_EQ(poly_eval(chi, 1), 0) << name;
    }
  }
}

TEST(CharPoly, SumOverLatticeIsTToTheRank) {
  EXPECT_EQ(sum_identity_check(lattice_of("A1"), 1), IntPolynomial::monomial(1));
  EXPECT_EQ(sum_identity_check(lattice_of("B2"), 1), IntPolynomial::monomial(2));
  EXPECT_EQ(sum_identity_check(lattice_of("F4"), 2), IntPolynomial::monomial(4));
  EXPECT_EQ(sum_identity_check(lattice_of("A2xB2"), 2), IntPolynomial::monomial(4));
}

TEST(Exponents, Fixtures) {
  EXPECT_EQ(exponents(lattice_of("B2")), (std::vector<long>{1, 3}));
  EXPECT_EQ(exponents(lattice_of("A3")), (std::vector<long>{1, 2, 3}));
  EXPECT_EQ(exponents(lattice_of("B3")), (std::vector<long>{1, 3, 5}));
  EXPECT_EQ(exponents(lattice_of("H3")), (std::vector<long>{1, 5, 9}));
  EXPECT_EQ(exponents(lattice_of("F4")), (std::vector<long>{1, 5, 7, 11}));
  EXPECT_EQ(exponents(lattice_of("E6")), (std::vector<long>{1, 4, 5, 7, 8, 11}));
}

TEST(Exponents, ProductOfDegreesIsGroupOrder) {
  for (const auto& t : testing::main_types()) {
    BigInt product = 1;
    for (long e : exponents(IntersectionLattice::build(build_root_system(t)))) product *= e + 1;
    EXPECT_EQ(product, t.expected_order()) << t.name();
  }
}

}  // namespace
}  // namespace coxlat
