#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "cadorder/ordering.hpp"
#include "cadorder/polynomial.hpp"
#include "cadorder/resultant.hpp"

namespace cadorder {

/// Projection polynomials for one ordering. `levels[k - 1]` holds level k:
/// canonical, nonconstant, distinct polynomials in the first k tuple variables.
/// Level n is the reduced input; level 1 is univariate (or empty).
struct ProjectionSet {
  VariableOrdering ordering;
  std::vector<std::vector<Polynomial>> levels;

  std::size_t size() const noexcept { return levels.size(); }
  const std::vector<Polynomial>& level(std::size_t k) const { return levels.at(k - 1); }
};

/// Canonicalize, drop zeros and constants, drop duplicates. Result is sorted.
inline std::vector<Polynomial> reduce_projection_factors(std::vector<Polynomial> polys) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (auto& p : polys) {
    if (p.is_constant()) continue;
    out.push_back(canonicalize(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// One projection step eliminating `v`: members free of v pass through, and
/// for members involving v we add every coefficient, the discriminant when the
/// degree is at least 2, and all pairwise resultants.
inline std::vector<Polynomial> project_once(const std::vector<Polynomial>& level, const Variable& v) {
  if (level.empty()) throw MathError("empty projection level");
  std::vector<Polynomial> raw;
  std::vector<const Polynomial*> involving;
  for (const auto& p : level) {
    const auto d = degree_in(p, v);
    if (d == 0) {
      raw.push_back(p);
      continue;
    }
    involving.push_back(&p);
    for (auto& c : coefficients_wrt(p, v)) raw.push_back(std::move(c));
    if (d >= 2) raw.push_back(discriminant(p, v));
  }
  for (std::size_t i = 0; i < involving.size(); ++i) {
    for (std::size_t j = i + 1; j < involving.size(); ++j) {
      if (*involving[i] == *involving[j]) continue;
      raw.push_back(resultant(*involving[i], *involving[j], v));
    }
  }
  return reduce_projection_factors(std::move(raw));
}

/// Levels n..1 for `ordering`, eliminating the tuple from its last element down.
inline ProjectionSet full_projection(const PolySystem& system, const VariableOrdering& ordering) {
  if (!ordering.is_permutation_of(system.variables)) {
    throw Error("ordering " + ordering.to_string() + " is not a permutation of the system variables");
  }
  const std::size_t n = ordering.size();
  ProjectionSet ps{ordering, std::vector<std::vector<Polynomial>>(n)};
  if (n == 0) return ps;
  ps.levels[n - 1] = reduce_projection_factors(system.polynomials);
  for (std::size_t k = n; k >= 2; --k) {
    const auto& above = ps.levels[k - 1];
    if (!above.empty()) ps.levels[k - 2] = project_once(above, ordering.tuple[k - 1]);
  }
  return ps;
}

}  // namespace cadorder
