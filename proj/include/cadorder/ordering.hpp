#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cadorder/polynomial.hpp"

namespace cadorder {

/// A variable ordering written as a tuple in the reverse order of projection:
/// the last element is eliminated first, the first element is the variable of
/// the final univariate level. Rendered as names joined by '>'.
struct VariableOrdering {
  std::vector<Variable> tuple;

  std::size_t size() const noexcept { return tuple.size(); }

  /// Variable eliminated first.
  const Variable& first_eliminated() const { return tuple.back(); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i != 0) s += '>';
      s += tuple[i].name();
    }
    return s;
  }

  /// Parse the `a>b>c` encoding; names must be distinct identifiers.
  static VariableOrdering parse(std::string_view text) {
    VariableOrdering o;
    std::size_t begin = 0;
    while (true) {
      const std::size_t end = text.find('>', begin);
      const std::string name(text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
      if (!Variable::is_identifier(name)) throw Error("invalid ordering '" + std::string(text) + "'");
      Variable v(name);
      if (std::find(o.tuple.begin(), o.tuple.end(), v) != o.tuple.end()) {
        throw Error("repeated variable in ordering '" + std::string(text) + "'");
      }
      o.tuple.push_back(std::move(v));
      if (end == std::string_view::npos) break;
      begin = end + 1;
    }
    return o;
  }

  /// True when the tuple is a permutation of `vars`.
  bool is_permutation_of(const std::vector<Variable>& vars) const {
    return tuple.size() == vars.size() && std::is_permutation(tuple.begin(), tuple.end(), vars.begin());
  }

  friend bool operator==(const VariableOrdering&, const VariableOrdering&) = default;
  friend std::strong_ordering operator<=>(const VariableOrdering& a, const VariableOrdering& b) {
    return std::lexicographical_compare_three_way(a.tuple.begin(), a.tuple.end(), b.tuple.begin(), b.tuple.end());
  }
};

inline constexpr std::size_t kDefaultOrderingCap = 7;

/// All |vars|! orderings in lexicographic tuple order.
inline std::vector<VariableOrdering> enumerate_orderings(std::vector<Variable> vars,
                                                         std::size_t cap = kDefaultOrderingCap) {
  if (vars.empty()) throw LimitError("no variables to order");
  if (vars.size() > cap) {
    throw LimitError(std::to_string(vars.size()) + " variables exceed the ordering enumeration cap of " +
                     std::to_string(cap));
  }
  std::sort(vars.begin(), vars.end());
  std::vector<VariableOrdering> out;
  do {
    out.push_back({vars});
  } while (std::next_permutation(vars.begin(), vars.end()));
  return out;
}

/// Lexicographically least tuple, comparing names position-wise.
inline VariableOrdering lex_tiebreak(const std::vector<VariableOrdering>& candidates) {
  if (candidates.empty()) throw Error("no candidate orderings");
  return *std::min_element(candidates.begin(), candidates.end());
}

}  // namespace cadorder
