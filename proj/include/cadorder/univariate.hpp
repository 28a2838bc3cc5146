#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cadorder/polynomial.hpp"

namespace cadorder {

/// Dense univariate polynomial with rational coefficients; index i holds the
/// coefficient of var^i. The top stored coefficient is nonzero unless empty (zero).
class UnivariatePolynomial {
 public:
  explicit UnivariatePolynomial(Variable var, std::vector<mpq_class> coeffs = {})
      : var_(std::move(var)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
  }

  const Variable& variable() const noexcept { return var_; }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  mpq_class leading_coefficient() const { return coeffs_.empty() ? mpq_class(0) : coeffs_.back(); }

  UnivariatePolynomial derivative() const {
    std::vector<mpq_class> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return UnivariatePolynomial(var_, std::move(d));
  }

  UnivariatePolynomial operator-() const {
    auto r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  UnivariatePolynomial scaled(const mpq_class& f) const {
    std::vector<mpq_class> c = coeffs_;
    for (auto& x : c) x *= f;
    return UnivariatePolynomial(var_, std::move(c));
  }

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePolynomial(a.var_);
    std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UnivariatePolynomial(a.var_, std::move(c));
  }

  /// Euclidean division over the rationals: {quotient, remainder}.
  std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& d) const {
    if (d.is_zero()) throw MathError("division by zero polynomial");
    std::vector<mpq_class> rem = coeffs_;
    const long dd = d.degree();
    std::vector<mpq_class> quo(degree() >= dd ? static_cast<std::size_t>(degree() - dd + 1) : 0);
    const mpq_class& ld = d.coeffs_.back();
    for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
      if (rem[k] == 0) continue;
      mpq_class f = rem[k] / ld;
      for (long j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.coeffs_[j];
      quo[k - dd] = std::move(f);
    }
    return {UnivariatePolynomial(var_, std::move(quo)), UnivariatePolynomial(var_, std::move(rem))};
  }

  /// Scale to integer coefficients with gcd 1 and positive leading coefficient.
  UnivariatePolynomial primitive() const {
    if (is_zero()) return *this;
    mpz_class den = 1;
    for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
      mpz_class n = c.get_num() * (den / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class f(den, g);
    f.canonicalize();
    if (coeffs_.back() < 0) f = -f;
    return scaled(f);
  }

  /// Sign of the value at +infinity (or -infinity) for a nonzero polynomial.
  int sign_at_infinity(bool negative) const {
    const int s = sgn(coeffs_.back());
    return (negative && (degree() & 1)) ? -s : s;
  }

  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  Variable var_;
  std::vector<mpq_class> coeffs_;
};

/// Convert a polynomial involving at most one variable. `fallback` names the
/// variable used when `p` is constant. Returns nullopt for multivariate input.
inline std::optional<UnivariatePolynomial> to_univariate(const Polynomial& p, const Variable& fallback) {
  const auto vars = p.variables();
  if (vars.size() > 1) return std::nullopt;
  const Variable& v = vars.empty() ? fallback : vars.front();
  std::vector<mpq_class> coeffs(degree_in(p, v) + 1);
  for (const auto& t : p.terms()) coeffs[t.monomial.exponent(v)] = mpq_class(t.coefficient);
  return UnivariatePolynomial(v, std::move(coeffs));
}

/// Gcd normalized to an integer-primitive polynomial with positive leading coefficient.
inline UnivariatePolynomial univariate_gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  if (a.is_zero() && b.is_zero()) throw MathError("gcd of zeros");
  while (!b.is_zero()) {
    auto r = a.divmod(b).second.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive();
}

}  // namespace cadorder
