#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cadorder/ordering.hpp"
#include "cadorder/projection.hpp"
#include "cadorder/real_roots.hpp"
#include "cadorder/univariate.hpp"

namespace cadorder {

enum class Heuristic { Brown, Sotd, Ndrr };

inline constexpr std::array<Heuristic, 3> kAllHeuristics{Heuristic::Brown, Heuristic::Sotd, Heuristic::Ndrr};

inline std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::Brown: return "brown";
    case Heuristic::Sotd: return "sotd";
    case Heuristic::Ndrr: return "ndrr";
  }
  return "?";
}

inline std::optional<Heuristic> parse_heuristic(std::string_view s) {
  for (auto h : kAllHeuristics) {
    if (to_string(h) == s) return h;
  }
  return std::nullopt;
}

/// Brown's three criteria for one variable; smaller is eliminated earlier.
struct BrownTriple {
  std::uint64_t overall_degree = 0;       // max degree of the variable in any input polynomial
  std::uint64_t max_term_degree = 0;      // max total degree of an input term containing it
  std::uint64_t containing_terms = 0;     // input terms containing it, summed over polynomials

  friend auto operator<=>(const BrownTriple&, const BrownTriple&) = default;
};

inline BrownTriple brown_triple(const PolySystem& system, const Variable& v) {
  if (std::find(system.variables.begin(), system.variables.end(), v) == system.variables.end()) {
    throw Error("unknown variable '" + v.name() + "'");
  }
  BrownTriple t;
  for (const auto& p : system.polynomials) {
    for (const auto& term : p.terms()) {
      const auto e = term.monomial.exponent(v);
      if (e == 0) continue;
      t.overall_degree = std::max<std::uint64_t>(t.overall_degree, e);
      t.max_term_degree = std::max(t.max_term_degree, term.monomial.total_degree());
      ++t.containing_terms;
    }
  }
  return t;
}

/// Every ordering consistent with ranking the variables by BrownTriple, with
/// tied variables interchangeable. Sorted lexicographically.
inline std::vector<VariableOrdering> brown_candidates(const PolySystem& system) {
  if (system.variables.empty()) throw Error("system has no variables");
  std::vector<std::pair<BrownTriple, Variable>> ranked;
  for (const auto& v : system.variables) ranked.emplace_back(brown_triple(system, v), v);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  // Elimination order is ascending triple; the tuple lists it reversed.
  std::vector<std::vector<Variable>> groups;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (i == 0 || ranked[i].first != ranked[i - 1].first) groups.emplace_back();
    groups.back().push_back(ranked[i].second);
  }
  std::reverse(groups.begin(), groups.end());
  for (auto& g : groups) std::sort(g.begin(), g.end());

  std::vector<VariableOrdering> out{VariableOrdering{}};
  for (auto& group : groups) {
    std::vector<VariableOrdering> extended;
    do {
      for (const auto& prefix : out) {
        VariableOrdering o = prefix;
        o.tuple.insert(o.tuple.end(), group.begin(), group.end());
        extended.push_back(std::move(o));
      }
    } while (std::next_permutation(group.begin(), group.end()));
    out = std::move(extended);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sum over every level, polynomial and monomial of the monomial's total degree.
inline std::uint64_t sotd_value(const ProjectionSet& ps) {
  std::uint64_t sum = 0;
  for (const auto& level : ps.levels) {
    for (const auto& p : level) {
      for (const auto& t : p.terms()) sum += t.monomial.total_degree();
    }
  }
  return sum;
}

/// Distinct real roots summed over the univariate level-1 polynomials.
inline std::uint64_t ndrr_value(const ProjectionSet& ps) {
  if (ps.levels.empty()) return 0;
  std::uint64_t sum = 0;
  const Variable& base = ps.ordering.tuple.front();
  for (const auto& p : ps.levels.front()) {
    auto u = to_univariate(p, base);
    if (!u) throw MathError("level 1 polynomial is not univariate");
    sum += count_distinct_real_roots(*u);
  }
  return sum;
}

struct OrderingMetrics {
  VariableOrdering ordering;
  std::uint64_t sotd = 0;
  std::uint64_t ndrr = 0;
};

/// sotd and ndrr for every enumerated ordering, in lexicographic ordering order.
inline std::vector<OrderingMetrics> evaluate_orderings(const PolySystem& system,
                                                       std::size_t cap = kDefaultOrderingCap) {
  std::vector<OrderingMetrics> out;
  for (auto& o : enumerate_orderings(system.variables, cap)) {
    const ProjectionSet ps = full_projection(system, o);
    out.push_back({std::move(o), sotd_value(ps), ndrr_value(ps)});
  }
  return out;
}

struct HeuristicReport {
  Heuristic heuristic = Heuristic::Brown;
  std::map<VariableOrdering, std::uint64_t> per_ordering;  // sotd and ndrr only
  std::map<Variable, BrownTriple> triples;                  // brown only
  std::vector<VariableOrdering> candidates;
  VariableOrdering chosen;
};

/// Report for a metric heuristic from precomputed per-ordering metrics.
inline HeuristicReport report_from_metrics(Heuristic h, const std::vector<OrderingMetrics>& metrics) {
  if (h == Heuristic::Brown) throw Error("brown is not a projection metric");
  if (metrics.empty()) throw Error("no orderings evaluated");
  HeuristicReport r;
  r.heuristic = h;
  for (const auto& m : metrics) r.per_ordering[m.ordering] = h == Heuristic::Sotd ? m.sotd : m.ndrr;
  std::uint64_t best = UINT64_MAX;
  for (const auto& [o, value] : r.per_ordering) best = std::min(best, value);
  for (const auto& [o, value] : r.per_ordering) {
    if (value == best) r.candidates.push_back(o);
  }
  r.chosen = lex_tiebreak(r.candidates);
  return r;
}

inline HeuristicReport brown_report(const PolySystem& system) {
  HeuristicReport r;
  r.heuristic = Heuristic::Brown;
  for (const auto& v : system.variables) r.triples.emplace(v, brown_triple(system, v));
  r.candidates = brown_candidates(system);
  r.chosen = lex_tiebreak(r.candidates);
  return r;
}

inline HeuristicReport choose(const PolySystem& system, Heuristic h, std::size_t cap = kDefaultOrderingCap) {
  if (system.polynomials.empty()) throw Error("empty system");
  if (h == Heuristic::Brown) return brown_report(system);
  return report_from_metrics(h, evaluate_orderings(system, cap));
}

/// All three reports, sharing one projection per ordering.
inline std::map<Heuristic, HeuristicReport> choose_all(const PolySystem& system,
                                                       std::size_t cap = kDefaultOrderingCap) {
  if (system.polynomials.empty()) throw Error("empty system");
  const auto metrics = evaluate_orderings(system, cap);
  return {{Heuristic::Brown, brown_report(system)},
          {Heuristic::Sotd, report_from_metrics(Heuristic::Sotd, metrics)},
          {Heuristic::Ndrr, report_from_metrics(Heuristic::Ndrr, metrics)}};
}

}  // namespace cadorder
