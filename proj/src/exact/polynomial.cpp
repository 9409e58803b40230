#include "coxlat/exact/polynomial.hpp"

#include <algorithm>
#include <map>

namespace coxlat {

BigInt poly_eval(const IntPolynomial& p, long t) { return p.eval(BigInt(t)); }

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

bool is_integral(const RatPolynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

IntPolynomial to_integer(const RatPolynomial& p) {
  if (!is_integral(p)) throw std::domain_error("polynomial has non-integral coefficients");
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(x.get_num());
  return IntPolynomial(std::move(c));
}

namespace {

std::vector<BigInt> signed_divisors(const BigInt& n) {
  BigInt m = abs(n);
  std::vector<BigInt> pos;
  for (BigInt i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      pos.push_back(i);
      BigInt other = m / i;
      if (other != i) pos.push_back(other);
    }
  }
  std::vector<BigInt> out;
  out.reserve(2 * pos.size());
  for (const auto& d : pos) {
    out.push_back(d);
    out.push_back(-d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IntegerFactorization factor_integer_roots(const IntPolynomial& p) {
  IntegerFactorization f;
  if (p.is_zero()) {
    f.cofactor = p;
    return f;
  }
  // Zero roots.
  std::size_t low = 0;
  while (p.coeffs()[low] == 0) ++low;
  std::vector<BigInt> rest(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
  IntPolynomial q(std::move(rest));
  for (std::size_t i = 0; i < low; ++i) f.roots.emplace_back(0);

  for (const auto& r : signed_divisors(q.coeff(0))) {
    if (q.degree() < 1) break;
    while (q.degree() >= 1 && q.eval(r) == 0) {
      auto [quot, remainder] = q.divmod(IntPolynomial(std::vector<BigInt>{BigInt(-r), BigInt(1)}));
      q = std::move(quot);
      f.roots.push_back(r);
    }
  }
  std::sort(f.roots.begin(), f.roots.end());
  f.cofactor = std::move(q);
  return f;
}

std::string to_factored_string(const IntPolynomial& p, const std::string& var) {
  if (p.degree() < 1) return p.to_string(var);
  const auto f = factor_integer_roots(p);
  if (f.roots.empty()) return p.to_string(var);

  std::string out;
  if (f.cofactor.degree() == 0) {
    const BigInt& c = f.cofactor.coeff(0);
    if (c == -1) {
      out = "-";
    } else if (c != 1) {
      out = c.get_str();
    }
  } else {
    out = "(" + f.cofactor.to_string(var) + ")";
  }

  std::map<BigInt, int> mult;
  for (const auto& r : f.roots) ++mult[r];
  // Positive roots first, ascending, then zero and negatives; this reads as
  // (t-1)(t-3)... for characteristic polynomials.
  std::vector<std::pair<BigInt, int>> order(mult.begin(), mult.end());
  std::stable_partition(order.begin(), order.end(), [](const auto& e) { return e.first > 0; });
  for (const auto& [r, m] : order) {
    std::string factor;
    if (r == 0) {
      factor = var;
    } else if (r > 0) {
      factor = "(" + var + "-" + r.get_str() + ")";
    } else {
      BigInt a = -r;
      factor = "(" + var + "+" + a.get_str() + ")";
    }
    out += factor;
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace coxlat
