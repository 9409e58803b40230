#include "coxlat/exact/scalar.hpp"

#include <stdexcept>

namespace coxlat {

namespace {

int rational_sign(const Rational& q) { return sgn(q); }

// Sign of a + b*sqrt(5), exact.
int surd_sign(const Rational& a, const Rational& b) {
  const int sa = rational_sign(a);
  const int sb = rational_sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 5 b^2.
  const Rational a2 = a * a;
  const Rational b2 = 5 * b * b;
  const int cmp = sgn(Rational(a2 - b2));
  if (cmp == 0) return 0;  // unreachable for rational a, b: sqrt 5 is irrational
  return cmp > 0 ? sa : sb;
}

}  // namespace

Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::from_parts(Rational a, Rational b) {
  Scalar s;
  if (sgn(b) == 0) {
    s.value_ = std::move(a);
  } else {
    s.value_ = QuadraticSurd{std::move(a), std::move(b)};
  }
  return s;
}

Scalar Scalar::quad(const Rational& a, const Rational& b) { return from_parts(a, b); }

Scalar Scalar::golden_ratio() { return from_parts(Rational(1, 2), Rational(1, 2)); }

Rational Scalar::rational_part() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  return std::get<QuadraticSurd>(value_).a;
}

Rational Scalar::surd_part() const {
  if (is_rational()) return Rational(0);
  return std::get<QuadraticSurd>(value_).b;
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
  return false;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q == 1;
  return false;
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return rational_sign(*q);
  const auto& s = std::get<QuadraticSurd>(value_);
  return surd_sign(s.a, s.b);
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  const auto& s = std::get<QuadraticSurd>(value_);
  return from_parts(-s.a, -s.b);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
    return *this;
  }
  *this = from_parts(rational_part() + o.rational_part(), surd_part() + o.surd_part());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
    return *this;
  }
  *this = from_parts(rational_part() - o.rational_part(), surd_part() - o.surd_part());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
    return *this;
  }
  const Rational a = rational_part(), b = surd_part();
  const Rational c = o.rational_part(), d = o.surd_part();
  // (a + b r)(c + d r) with r^2 = 5
  *this = from_parts(a * c + 5 * b * d, a * d + b * c);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
    return *this;
  }
  const Rational c = o.rational_part(), d = o.surd_part();
  const Rational norm = c * c - 5 * d * d;  // nonzero since sqrt 5 is irrational
  const Scalar conj = from_parts(c / norm, -d / norm);
  return *this *= conj;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.is_rational() != y.is_rational()) return false;
  if (x.is_rational()) return std::get<Rational>(x.value_) == std::get<Rational>(y.value_);
  const auto& s = std::get<QuadraticSurd>(x.value_);
  const auto& t = std::get<QuadraticSurd>(y.value_);
  return s.a == t.a && s.b == t.b;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) {
    const int c = cmp(std::get<Rational>(x.value_), std::get<Rational>(y.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  const auto& s = std::get<QuadraticSurd>(value_);
  std::string out;
  if (sgn(s.a) != 0) out = s.a.get_str() + (sgn(s.b) > 0 ? "+" : "");
  out += s.b.get_str() + "*sqrt5";
  return out;
}

}  // namespace coxlat
