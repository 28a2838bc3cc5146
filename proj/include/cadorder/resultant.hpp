#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cadorder/polynomial.hpp"

namespace cadorder {

namespace detail {

/// Polynomial in one main variable with multivariate coefficients; index = power.
using Recursive = std::vector<Polynomial>;

inline void trim(Recursive& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline long degree(const Recursive& a) { return static_cast<long>(a.size()) - 1; }

/// lc(b)^(deg a - deg b + 1) * a  mod  b. Requires deg a >= deg b >= 0.
inline Recursive pseudo_remainder(Recursive r, const Recursive& b) {
  const long n = degree(b);
  const Polynomial& lb = b.back();
  long e = degree(r) - n + 1;
  while (!r.empty() && degree(r) >= n) {
    const long k = degree(r) - n;
    const Polynomial lr = r.back();
    for (auto& c : r) c *= lb;
    for (long j = 0; j <= n; ++j) r[j + k] -= lr * b[j];
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    const Polynomial f = pow(lb, static_cast<std::uint64_t>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

inline Recursive divide_coefficients(Recursive a, const Polynomial& d) {
  if (d == Polynomial(1)) return a;
  for (auto& c : a) c = exact_divide(c, d);
  return a;
}

}  // namespace detail

/// Resultant of p and q with respect to v, via the subresultant PRS.
///
/// Equals the Sylvester determinant. If q has degree 0 in v the result is
/// q^deg(p) (symmetrically for p); when both have degree 0 it is 1.
inline Polynomial resultant(const Polynomial& p, const Polynomial& q, const Variable& v) {
  if (p.is_zero() || q.is_zero()) throw MathError("zero operand");
  detail::Recursive a = coefficients_wrt(p, v);
  detail::Recursive b = coefficients_wrt(q, v);
  Polynomial sign(1);
  if (a.size() < b.size()) {
    std::swap(a, b);
    if ((detail::degree(a) & 1) && (detail::degree(b) & 1)) sign = -sign;
  }

  Polynomial g(1);
  Polynomial h(1);
  while (detail::degree(b) > 0) {
    const long da = detail::degree(a);
    const long db = detail::degree(b);
    const long delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    detail::Recursive r = detail::pseudo_remainder(a, b);
    a = std::move(b);
    b = detail::divide_coefficients(std::move(r), g * pow(h, static_cast<std::uint64_t>(delta)));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_divide(pow(g, static_cast<std::uint64_t>(delta)), pow(h, static_cast<std::uint64_t>(delta - 1)));
    }
  }
  if (b.empty()) return {};

  const long da = detail::degree(a);
  Polynomial last = pow(b.back(), static_cast<std::uint64_t>(da));
  if (da >= 2) last = exact_divide(last, pow(h, static_cast<std::uint64_t>(da - 1)));
  return sign * last;
}

/// resultant(p, dp/dv, v). Differs from the classical discriminant by a factor
/// of +-lc(p); requires degree_in(p, v) >= 2.
inline Polynomial discriminant(const Polynomial& p, const Variable& v) {
  if (degree_in(p, v) < 2) throw MathError("degree too low for discriminant");
  return resultant(p, derivative(p, v), v);
}

}  // namespace cadorder
