#pragma once

// Reader and writer for the `.poly` problem format:
//
//   # comment
//   vars: x, y, z        (optional, first significant line)
//   x^4 + y              (one polynomial per line)
//   y^2*z + 1
//
// Operators are + - * ^ and parentheses; `^` takes a non-negative integer
// literal; multiplication must be written explicitly.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cadorder/polynomial.hpp"

namespace cadorder {

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t line, const std::optional<std::vector<Variable>>& declared)
      : text_(text), line_(line), declared_(declared) {
    tokenize();
  }

  Polynomial parse() {
    Polynomial p = expression();
    if (peek().kind != Kind::End) fail(peek(), "unexpected '" + peek().text + "'");
    return p;
  }

  std::size_t first_column() const { return tokens_.front().column; }

 private:
  enum class Kind { Integer, Identifier, Plus, Minus, Star, Caret, LParen, RParen, End };

  struct Token {
    Kind kind;
    std::string text;
    std::size_t column;
  };

  [[noreturn]] void fail(const Token& at, const std::string& what) const { throw ParseError(line_, at.column, what); }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      const std::size_t col = i + 1;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        tokens_.push_back({Kind::Integer, std::string(text_.substr(i, j - i)), col});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
        tokens_.push_back({Kind::Identifier, std::string(text_.substr(i, j - i)), col});
        i = j;
      } else {
        Kind k;
        switch (c) {
          case '+': k = Kind::Plus; break;
          case '-': k = Kind::Minus; break;
          case '*': k = Kind::Star; break;
          case '^': k = Kind::Caret; break;
          case '(': k = Kind::LParen; break;
          case ')': k = Kind::RParen; break;
          default:
            throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
        }
        tokens_.push_back({k, std::string(1, c), col});
        ++i;
      }
    }
    tokens_.push_back({Kind::End, "end of line", text_.size() + 1});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  // expression := term (('+' | '-') term)*
  Polynomial expression() {
    Polynomial acc = term();
    while (peek().kind == Kind::Plus || peek().kind == Kind::Minus) {
      const bool minus = next().kind == Kind::Minus;
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  // term := unary ('*' unary)*
  Polynomial term() {
    Polynomial acc = unary();
    while (peek().kind == Kind::Star) {
      next();
      acc *= unary();
    }
    return acc;
  }

  // unary := ('+' | '-') unary | power
  Polynomial unary() {
    if (peek().kind == Kind::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Kind::Plus) {
      next();
      return unary();
    }
    return power();
  }

  // power := primary ('^' integer)?
  Polynomial power() {
    Polynomial base = primary();
    if (peek().kind != Kind::Caret) return base;
    next();
    const Token& e = peek();
    if (e.kind == Kind::Minus) fail(e, "negative exponent");
    if (e.kind == Kind::Identifier || e.kind == Kind::LParen) fail(e, "exponent must be an integer literal");
    if (e.kind != Kind::Integer) fail(e, "expected exponent");
    next();
    mpz_class value(e.text);
    if (value > UINT32_MAX) fail(e, "exponent too large");
    return pow(base, value.get_ui());
  }

  // primary := integer | identifier | '(' expression ')'
  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Kind::Integer:
        next();
        return Polynomial(mpz_class(t.text));
      case Kind::Identifier: {
        next();
        Variable v(t.text);
        if (declared_ && std::find(declared_->begin(), declared_->end(), v) == declared_->end()) {
          fail(t, "undeclared variable '" + t.text + "'");
        }
        return Polynomial::variable(v);
      }
      case Kind::LParen: {
        next();
        Polynomial inner = expression();
        if (peek().kind != Kind::RParen) fail(peek(), "expected ')'");
        next();
        return inner;
      }
      case Kind::End:
        fail(t, "unexpected end of line");
      default:
        fail(t, "unexpected '" + t.text + "'");
    }
  }

  std::string_view text_;
  std::size_t line_;
  const std::optional<std::vector<Variable>>& declared_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

/// Returns the declared names if `line` is a `vars:` declaration.
inline std::optional<std::vector<Variable>> parse_declaration(std::string_view line, std::size_t lineno) {
  const std::size_t start = line.find_first_not_of(" \t");
  if (start == std::string_view::npos || line.substr(start, 4) != "vars") return std::nullopt;
  std::size_t i = start + 4;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (i >= line.size() || line[i] != ':') return std::nullopt;
  ++i;
  std::vector<Variable> vars;
  while (true) {
    const std::size_t comma = line.find(',', i);
    const std::string_view raw = line.substr(i, comma == std::string_view::npos ? std::string_view::npos : comma - i);
    const std::string_view name = strip(raw);
    const std::size_t lead = raw.find_first_not_of(" \t");
    const std::size_t col = i + 1 + (lead == std::string_view::npos ? 0 : lead);
    if (name.empty()) {
      if (vars.empty() && comma == std::string_view::npos) throw ParseError(lineno, col, "empty variable declaration");
      throw ParseError(lineno, col, "expected variable name");
    }
    if (!Variable::is_identifier(std::string(name))) {
      throw ParseError(lineno, col, "invalid variable name '" + std::string(name) + "'");
    }
    Variable v{std::string(name)};
    if (std::find(vars.begin(), vars.end(), v) != vars.end()) {
      throw ParseError(lineno, col, "duplicate variable '" + std::string(name) + "'");
    }
    vars.push_back(std::move(v));
    if (comma == std::string_view::npos) break;
    i = comma + 1;
  }
  return vars;
}

}  // namespace detail

/// Parse a single polynomial expression (no declaration, no comments).
inline Polynomial parse_polynomial(std::string_view text) {
  const std::optional<std::vector<Variable>> none;
  return detail::ExpressionParser(text, 1, none).parse();
}

/// Parse `.poly` text into a system. Throws ParseError with 1-based positions.
inline PolySystem parse_system(std::string_view text) {
  std::optional<std::vector<Variable>> declared;
  std::vector<Polynomial> polys;
  bool seen_significant = false;
  std::size_t lineno = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    ++lineno;
    begin = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::strip(line).empty()) continue;
    if (!seen_significant) {
      seen_significant = true;
      declared = detail::parse_declaration(line, lineno);
      if (declared) continue;
    }
    detail::ExpressionParser parser(line, lineno, declared);
    Polynomial p = parser.parse();
    if (p.is_zero()) throw ParseError(lineno, parser.first_column(), "polynomial is identically zero");
    polys.push_back(std::move(p));
  }
  if (polys.empty()) throw ParseError(lineno == 0 ? 1 : lineno, 1, "empty system");
  return make_system(declared.value_or(std::vector<Variable>{}), polys);
}

/// Canonical infix text: graded-lex term order, explicit `*` and `^`.
inline std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const mpz_class magnitude = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    bool first_factor = true;
    for (const auto& [v, e] : t.monomial.entries()) {
      if (!first_factor) out << '*';
      first_factor = false;
      out << v.name();
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

}  // namespace cadorder
