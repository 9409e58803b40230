#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxlat/exact/scalar.hpp"

namespace coxlat {

/// Family letter of an irreducible finite Coxeter group. C_n is accepted by
/// the parser and stored as B_n (same Coxeter group).
enum class Family { A, B, D, E, F, G, H, I };

struct Factor {
  Family family = Family::A;
  int rank = 1;
  /// Edge label m of I2(m); zero for every other family.
  int dihedral_m = 0;

  std::string name() const;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Rejected rank/family combinations and unsupported inputs.
class InvalidType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed the configured element cap, and
/// for types outside the supported scale (E8).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite Coxeter group as a product of irreducible factors. Simple roots
/// are numbered factor by factor, each factor in Bourbaki order.
struct CoxeterType {
  std::vector<Factor> factors;

  int rank() const;
  bool irreducible() const { return factors.size() == 1; }
  /// "A3", "I2(7)", "A2xB2".
  std::string name() const;
  /// Group order from the classical product-of-degrees formulas.
  BigInt expected_order() const;
  /// Symmetric Coxeter matrix m_ij (1 on the diagonal, 2 for commuting
  /// generators, including across factors).
  std::vector<std::vector<int>> coxeter_matrix() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

/// Throws InvalidType for inadmissible combinations: A n>=1, B n>=2,
/// D n>=4, E 6..8, F4, G2, H3/H4, I2(m) m>=3.
void validate(const Factor& f);
void validate(const CoxeterType& t);

CoxeterType make_type(Family family, int rank);
CoxeterType dihedral_type(int m);
CoxeterType product(const CoxeterType& a, const CoxeterType& b);

/// The classical degrees of an irreducible factor (used as fixtures and for
/// fast order checks; the verification pipeline derives degrees from the
/// intersection lattice instead).
std::vector<int> classical_degrees(const Factor& f);

}  // namespace coxlat
