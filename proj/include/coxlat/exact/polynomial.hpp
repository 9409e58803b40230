#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxlat/exact/scalar.hpp"

namespace coxlat {

/// Dense univariate polynomial, coefficients in ascending degree, no
/// trailing zeros. The zero polynomial has no coefficients.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(long c) { if (c != 0) coeffs_.push_back(T(c)); }  // NOLINT

  static Polynomial monomial(std::size_t degree, T coeff = T(1)) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  /// (t - r_1)(t - r_2)...
  static Polynomial from_roots(const std::vector<T>& roots) {
    Polynomial p(1);
    for (const auto& r : roots) p *= Polynomial(std::vector<T>{T(-r), T(1)});
    return p;
  }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = T(acc * x + *it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    std::vector<T> out(coeffs_.size() + o.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
  }
  Polynomial& scale(const T& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder. Over an integer coefficient type the divisor
  /// must be monic up to sign; throws std::domain_error otherwise or when
  /// dividing by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem = coeffs_;
    if (degree() < d.degree()) return {Polynomial(), *this};
    std::vector<T> quot(coeffs_.size() - d.coeffs_.size() + 1, T(0));
    const T& lead = d.leading();
    for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
      T& top = rem[static_cast<std::size_t>(k) + d.coeffs_.size() - 1];
      if (top == 0) continue;
      T q = divide_exact(top, lead);
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * d.coeffs_[j];
      quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Expanded text form, highest degree first, e.g. "t^2 - 4t + 3".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const T& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const bool neg = c < 0;
      T mag = neg ? T(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = (mag == 1);
      if (!unit || i == 0) out += mag.get_str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  static T divide_exact(const T& a, const T& b);

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <>
inline Rational Polynomial<Rational>::divide_exact(const Rational& a, const Rational& b) {
  return Rational(a / b);
}

template <>
inline BigInt Polynomial<BigInt>::divide_exact(const BigInt& a, const BigInt& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw std::domain_error("integer polynomial division is not exact");
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

/// Exact value of p at an integer point.
BigInt poly_eval(const IntPolynomial& p, long t);

RatPolynomial to_rational(const IntPolynomial& p);

/// Integer coefficients if every coefficient is integral.
bool is_integral(const RatPolynomial& p);
IntPolynomial to_integer(const RatPolynomial& p);

/// Integer roots of p with multiplicity (ascending) plus the cofactor left
/// after dividing out (t - r) for each root. Roots are found among the
/// divisors of the lowest nonzero coefficient; zero roots come from the
/// vanishing low-order coefficients.
struct IntegerFactorization {
  std::vector<BigInt> roots;
  IntPolynomial cofactor;
};
IntegerFactorization factor_integer_roots(const IntPolynomial& p);

/// "(t-1)(t-5)" when p splits over the integers, "(t-1)(t^2 + 1)" when it
/// partially does, the expanded form otherwise. Constant factors lead.
std::string to_factored_string(const IntPolynomial& p, const std::string& var = "t");

}  // namespace coxlat
