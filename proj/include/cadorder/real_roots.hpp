#pragma once

#include <cstdint>
#include <vector>

#include "cadorder/univariate.hpp"

namespace cadorder {

/// p / gcd(p, p'), primitive with positive leading coefficient.
inline UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw MathError("squarefree part of zero polynomial");
  const auto g = univariate_gcd(p, p.derivative());
  return p.divmod(g).first.primitive();
}

/// Canonical Sturm chain s0 = p, s1 = p', s(i+1) = -rem(s(i-1), s(i)), ending at
/// the first constant. Coefficients are exact rationals and are never rescaled.
inline std::vector<UnivariatePolynomial> sturm_sequence(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw MathError("Sturm sequence of zero polynomial");
  std::vector<UnivariatePolynomial> chain{p};
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() > 0) {
    auto r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace detail {

inline int sign_variations(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

/// Scale by a positive rational to integer coefficients with gcd 1.
inline UnivariatePolynomial positive_primitive(const UnivariatePolynomial& p) {
  auto q = p.primitive();
  return sgn(q.leading_coefficient()) == sgn(p.leading_coefficient()) ? q : -q;
}

}  // namespace detail

/// Number of distinct real roots, from sign variations at -inf and +inf of the
/// Sturm chain of the squarefree part. Nonzero constants have no roots.
inline std::uint64_t count_distinct_real_roots(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw MathError("identically zero has infinitely many roots");
  if (p.degree() == 0) return 0;
  const auto f = squarefree_part(p);
  // Same recurrence as sturm_sequence, with positive rescaling to keep
  // coefficients small; only the signs at infinity matter.
  std::vector<UnivariatePolynomial> chain{f, detail::positive_primitive(f.derivative())};
  while (chain.back().degree() > 0) {
    auto r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(detail::positive_primitive(-r));
  }
  std::vector<int> at_neg;
  std::vector<int> at_pos;
  for (const auto& s : chain) {
    at_neg.push_back(s.sign_at_infinity(true));
    at_pos.push_back(s.sign_at_infinity(false));
  }
  return static_cast<std::uint64_t>(detail::sign_variations(at_neg) - detail::sign_variations(at_pos));
}

}  // namespace cadorder
