#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coxlat/coxeter/group.hpp"
#include "coxlat/coxeter/parabolic.hpp"
#include "coxlat/coxeter/root_system.hpp"
#include "coxlat/exact/polynomial.hpp"
#include "coxlat/lattice/lattice.hpp"

namespace coxlat {

struct AnalysisOptions {
  std::size_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
};

/// Root system, group, lattice and the per-subset data every identity
/// draws on, computed once.
class Analysis {
 public:
  static Analysis build(const CoxeterType& type, const AnalysisOptions& options = {});

  const CoxeterType& type() const { return rs_.type; }
  const RootSystem& roots() const { return rs_; }
  const Group& group() const { return group_; }
  const IntersectionLattice& lattice() const { return lattice_; }
  const SubsetPartition& partition() const { return partition_; }
  unsigned threads() const { return threads_; }

  int rank() const { return rs_.rank; }
  std::size_t subset_count() const { return std::size_t{1} << rs_.rank; }

  std::size_t parabolic_order(SubsetMask k) const { return parabolic_order_[k]; }
  std::size_t fix_node(SubsetMask k) const { return fix_node_[k]; }
  /// chi(L^Fix(W_K), t)
  const IntPolynomial& chi(SubsetMask k) const { return chi_[k]; }
  const BigInt& chi_at_minus_one(SubsetMask k) const { return chi_minus_one_[k]; }
  /// |W| / |N_W(W_K)|, constant on each orbit of subsets.
  std::size_t normalizer_index(SubsetMask k) const { return orbit_index_[partition_.orbit_of[k]]; }
  std::size_t lambda(SubsetMask k) const { return partition_.orbits[partition_.orbit_of[k]].size; }

 private:
  Analysis(RootSystem rs, Group g, IntersectionLattice lat)
      : rs_(std::move(rs)), group_(std::move(g)), lattice_(std::move(lat)) {}

  RootSystem rs_;
  Group group_;
  IntersectionLattice lattice_;
  SubsetPartition partition_;
  unsigned threads_ = 1;
  std::vector<std::size_t> parabolic_order_;
  std::vector<std::size_t> fix_node_;
  std::vector<IntPolynomial> chi_;
  std::vector<BigInt> chi_minus_one_;
  std::vector<std::size_t> orbit_index_;
};

/// One row of the Theorem 1 report, per orbit of subsets.
struct OrbitRow {
  SubsetMask representative = 0;
  std::string type_label;
  /// |lambda(K)| by brute force.
  std::size_t lambda_size = 0;
  Rational rhs_value;
  std::size_t normalizer_index = 0;
  IntPolynomial chi_fix;
  bool match = false;
};

/// Either side of an identity: an exact number, a polynomial, or a list of
/// numbers (one per row or per tested element).
using IdentityValue = std::variant<Rational, RatPolynomial, std::vector<Rational>>;

struct IdentityReport {
  std::string name;
  IdentityValue lhs;
  IdentityValue rhs;
  bool holds = false;
  std::vector<OrbitRow> rows;
  /// Named side checks, in insertion order.
  std::vector<std::pair<std::string, bool>> flags;
  /// Per-row differences when something fails.
  std::vector<std::string> mismatches;
  std::string note;
  std::optional<double> timing_ms;
};

struct DegreeData {
  std::vector<long> degrees;
  std::size_t positive_root_count = 0;
};

/// Degrees from the exponents of the lattice (exponent + 1).
DegreeData degree_data(const IntersectionLattice& lat, const RootSystem& rs);
/// Degrees of W_K, from the lattices of the irreducible components of K.
std::vector<long> parabolic_degrees(const RootSystem& rs, SubsetMask k);

/// (-1)^(n-|K|) |W_K| / |N_W(W_K)| chi(L^Fix(W_K), -1)
Rational theorem1_rhs(const Analysis& a, SubsetMask k);

/// |lambda(K)| from the block statistics of K in types A, B/C and D.
/// Throws InvalidType for other families and for reducible types.
BigInt closed_form_lambda(const CoxeterType& type, SubsetMask k);

IdentityReport verify_theorem1(const Analysis& a);
IdentityReport verify_theorem2(const Analysis& a);
IdentityReport verify_classical(const Analysis& a);
IdentityReport verify_orbit_sum(const Analysis& a);
IdentityReport verify_lattice_sum(const Analysis& a);
IdentityReport verify_lemma34(const Analysis& a);
IdentityReport verify_degrees_identity(const Analysis& a);
/// Every element when |W| <= kCosetExhaustiveLimit, otherwise
/// kCosetSampleCount elements w_k = floor(k |W| / kCosetSampleCount).
IdentityReport verify_coset_identity(const Analysis& a);
/// The identity for the given elements only.
IdentityReport verify_coset_identity(const Analysis& a, const std::vector<std::size_t>& elements);

inline constexpr std::size_t kCosetExhaustiveLimit = 10'000;
inline constexpr std::size_t kCosetSampleCount = 1'000;
std::vector<std::size_t> coset_test_elements(std::size_t order);

/// Identity names in canonical report order.
const std::vector<std::string>& identity_names();
/// Throws std::invalid_argument for an unknown name.
IdentityReport verify_identity(const Analysis& a, const std::string& name);

}  // namespace coxlat
