#pragma once

#include <compare>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace coxlat {

using BigInt = mpz_class;
using Rational = mpq_class;

/// a + b*sqrt(5) with b != 0. Values with b == 0 are always held as a plain
/// Rational inside Scalar.
struct QuadraticSurd {
  Rational a;
  Rational b;
};

/// Exact element of Q or Q(sqrt 5).
///
/// Root coordinates and Gram entries of every geometric root system live
/// here: the crystallographic types never leave Q, H3 and H4 need the golden
/// ratio (1 + sqrt 5) / 2.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)

  static Scalar rational(long p, long q);
  static Scalar quad(const Rational& a, const Rational& b);
  static Scalar golden_ratio();

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  /// The a in a + b*sqrt 5.
  Rational rational_part() const;
  /// The b in a + b*sqrt 5 (zero for rationals).
  Rational surd_part() const;

  bool is_zero() const;
  bool is_one() const;
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// "p", "p/q", or "a+b*sqrt5" / "b*sqrt5".
  std::string to_string() const;

 private:
  static Scalar from_parts(Rational a, Rational b);

  std::variant<Rational, QuadraticSurd> value_;
};

}  // namespace coxlat
