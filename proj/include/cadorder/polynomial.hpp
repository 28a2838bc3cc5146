#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cadorder/error.hpp"

namespace cadorder {

/// A named indeterminate. Equality and ordering are byte-wise on the name.
class Variable {
 public:
  explicit Variable(std::string name) : name_(std::move(name)) {
    if (!is_identifier(name_)) {
      throw Error("invalid variable name '" + name_ + "'");
    }
  }

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    const int c = a.name_.compare(b.name_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  static bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s.front())) return false;
    return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
  }

 private:
  std::string name_;
};

inline int compare_mpz(const mpz_class& a, const mpz_class& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

/// Power product of variables. Entries are sorted by variable and carry no zero exponents.
class Monomial {
 public:
  using Entry = std::pair<Variable, std::uint32_t>;

  Monomial() = default;

  explicit Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    entries_ = std::move(merged);
    for (const auto& e : entries_) degree_ += e.second;
  }

  static Monomial of(const Variable& v, std::uint32_t exponent = 1) {
    return Monomial({{v, exponent}});
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::uint64_t total_degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return entries_.empty(); }

  std::uint32_t exponent(const Variable& v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, const Variable& x) { return e.first < x; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
  }

  /// Copy of this monomial with `v` removed.
  Monomial without(const Variable& v) const {
    Monomial m;
    for (const auto& e : entries_) {
      if (e.first != v) {
        m.entries_.push_back(e);
        m.degree_ += e.second;
      }
    }
    return m;
  }

  /// Copy of this monomial with the exponent of `v` replaced.
  Monomial with_exponent(const Variable& v, std::uint32_t exponent) const {
    auto entries = without(v).entries_;
    entries.emplace_back(v, exponent);
    return Monomial(std::move(entries));
  }

  bool divides(const Monomial& other) const {
    auto it = other.entries_.begin();
    for (const auto& e : entries_) {
      while (it != other.entries_.end() && it->first < e.first) ++it;
      if (it == other.entries_.end() || it->first != e.first || it->second < e.second) return false;
    }
    return true;
  }

  /// `other / *this`; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial q;
    auto it = entries_.begin();
    for (const auto& e : other.entries_) {
      while (it != entries_.end() && it->first < e.first) ++it;
      std::uint32_t sub = (it != entries_.end() && it->first == e.first) ? it->second : 0;
      if (e.second > sub) {
        q.entries_.emplace_back(e.first, e.second - sub);
        q.degree_ += e.second - sub;
      }
    }
    return q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
      if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
        m.entries_.push_back(*i++);
      } else if (i == a.entries_.end() || j->first < i->first) {
        m.entries_.push_back(*j++);
      } else {
        m.entries_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

  /// Graded lexicographic order: total degree first, then the exponent of the
  /// smallest-named variable where the two differ (larger exponent is greater).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
      if (i->first == j->first) {
        if (i->second != j->second) return i->second <=> j->second;
        ++i;
        ++j;
      } else if (i->first < j->first) {
        return std::strong_ordering::greater;
      } else {
        return std::strong_ordering::less;
      }
    }
    if (i != a.entries_.end()) return std::strong_ordering::greater;
    if (j != b.entries_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Entry> entries_;
  std::uint64_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  mpz_class coefficient;
};

/// Sparse multivariate polynomial over the integers.
///
/// Terms are kept in descending graded-lexicographic order with no zero
/// coefficients and no repeated monomials, so equality is structural and
/// rendering is deterministic. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(mpz_class(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const mpz_class& c) {                 // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial(), c});
  }

  static Polynomial variable(const Variable& v) { return monomial(Monomial::of(v), 1); }

  static Polynomial monomial(Monomial m, const mpz_class& c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }

  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
  }

  /// Coefficient of the greatest term; 0 for the zero polynomial.
  mpz_class leading_coefficient() const { return terms_.empty() ? mpz_class(0) : terms_.front().coefficient; }

  /// Constant value; meaningful only when is_constant().
  mpz_class constant_value() const { return leading_coefficient(); }

  std::vector<Variable> variables() const {
    std::vector<Variable> vars;
    for (const auto& t : terms_) {
      for (const auto& e : t.monomial.entries()) vars.push_back(e.first);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  bool involves(const Variable& v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.exponent(v) != 0; });
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.terms_.front().coefficient);
    if (b.is_constant()) return a.scaled(b.terms_.front().coefficient);
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
      }
    }
    return from_terms(std::move(products));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const mpz_class& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }

  /// Multiply every monomial by `m`. Order is preserved by grlex compatibility.
  Polynomial shifted(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.monomial = t.monomial * m;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].coefficient != b.terms_[i].coefficient ||
          !(a.terms_[i].monomial == b.terms_[i].monomial)) {
        return false;
      }
    }
    return true;
  }

  /// Deterministic total order, used for sets of polynomials.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.terms_[i].monomial <=> b.terms_[i].monomial; c != 0) return c;
      if (int c = compare_mpz(a.terms_[i].coefficient, b.terms_[i].coefficient); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return a.terms_.size() <=> b.terms_.size();
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    auto push_b = [&](const Term& t) {
      r.terms_.push_back(t);
      if (subtract) r.terms_.back().coefficient = -t.coefficient;
    };
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end()) {
        r.terms_.push_back(*i++);
        continue;
      }
      if (i == a.terms_.end()) {
        push_b(*j++);
        continue;
      }
      auto c = i->monomial <=> j->monomial;
      if (c > 0) {
        r.terms_.push_back(*i++);
      } else if (c < 0) {
        push_b(*j++);
      } else {
        mpz_class sum = subtract ? mpz_class(i->coefficient - j->coefficient)
                                 : mpz_class(i->coefficient + j->coefficient);
        if (sum != 0) r.terms_.push_back({i->monomial, std::move(sum)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline Polynomial pow(const Polynomial& base, std::uint64_t exponent) {
  Polynomial result(1);
  Polynomial b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// Maximum exponent of `v` over the terms of `p`; 0 for the zero polynomial.
inline std::uint32_t degree_in(const Polynomial& p, const Variable& v) {
  std::uint32_t d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.monomial.exponent(v));
  return d;
}

/// Maximum total degree of a term of `p`; 0 for the zero polynomial.
inline std::uint64_t total_degree(const Polynomial& p) {
  // Terms are graded, so the first one carries the maximum.
  return p.is_zero() ? 0 : p.terms().front().monomial.total_degree();
}

/// Entry i is the coefficient of v^i; the list has degree_in(p, v) + 1 entries.
inline std::vector<Polynomial> coefficients_wrt(const Polynomial& p, const Variable& v) {
  std::vector<std::vector<Term>> buckets(degree_in(p, v) + 1);
  for (const auto& t : p.terms()) {
    buckets[t.monomial.exponent(v)].push_back({t.monomial.without(v), t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b)));
  return out;
}

/// Inverse of coefficients_wrt: sum of coeffs[i] * v^i.
inline Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, const Variable& v) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Monomial shift = Monomial::of(v, static_cast<std::uint32_t>(i));
    for (const auto& t : coeffs[i].terms()) terms.push_back({t.monomial * shift, t.coefficient});
  }
  return Polynomial::from_terms(std::move(terms));
}

inline Polynomial derivative(const Polynomial& p, const Variable& v) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const std::uint32_t e = t.monomial.exponent(v);
    if (e == 0) continue;
    terms.push_back({t.monomial.with_exponent(v, e - 1), t.coefficient * e});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// Non-negative gcd of the integer coefficients; 0 for the zero polynomial.
inline mpz_class content(const Polynomial& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Primitive part with positive leading coefficient; canonicalize(0) == 0.
inline Polynomial canonicalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class c = content(p);
  if (p.leading_coefficient() < 0) c = -c;
  if (c == 1) return p;
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
  return Polynomial::from_terms(std::move(terms));
}

/// Exact quotient a / b. Throws MathError when b is zero or does not divide a.
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  if (b.is_constant()) {
    const mpz_class& c = b.terms().front().coefficient;
    std::vector<Term> terms = a.terms();
    for (auto& t : terms) {
      if (!mpz_divisible_p(t.coefficient.get_mpz_t(), c.get_mpz_t())) {
        throw MathError("inexact polynomial division");
      }
      mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
    }
    return Polynomial::from_terms(std::move(terms));
  }
  const Term& lead = b.terms().front();
  std::vector<Term> quotient;
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const Term& top = rest.terms().front();
    if (!lead.monomial.divides(top.monomial) ||
        !mpz_divisible_p(top.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t())) {
      throw MathError("inexact polynomial division");
    }
    Term q{lead.monomial.quotient_of(top.monomial), 0};
    mpz_divexact(q.coefficient.get_mpz_t(), top.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t());
    rest -= b.shifted(q.monomial).scaled(q.coefficient);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(std::move(quotient));
}

/// Apply a variable renaming; variables missing from the map are kept.
inline Polynomial rename_variables(const Polynomial& p, const std::map<Variable, Variable>& mapping) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [v, e] : t.monomial.entries()) {
      auto it = mapping.find(v);
      entries.emplace_back(it == mapping.end() ? v : it->second, e);
    }
    terms.push_back({Monomial(std::move(entries)), t.coefficient});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// A system of nonzero, pairwise distinct polynomials over a name-sorted variable list.
struct PolySystem {
  std::vector<Variable> variables;
  std::vector<Polynomial> polynomials;
};

/// Build a system, collapsing duplicates (first occurrence kept) and adding any
/// variable the polynomials use. Zero polynomials are rejected.
inline PolySystem make_system(std::vector<Variable> variables, const std::vector<Polynomial>& polys) {
  PolySystem s;
  for (const auto& p : polys) {
    if (p.is_zero()) throw MathError("zero polynomial in system");
    if (std::find(s.polynomials.begin(), s.polynomials.end(), p) != s.polynomials.end()) continue;
    s.polynomials.push_back(p);
    for (const auto& v : p.variables()) variables.push_back(v);
  }
  std::sort(variables.begin(), variables.end());
  variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  s.variables = std::move(variables);
  return s;
}

}  // namespace cadorder
