// Polynomial text syntax: terms joined by `+`/`-`, a term is
// `[coeff*]x<i>[^e][*x<j>[^e]]...` with integer or `a/b` coefficients.
#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "tropdepth/poly.hpp"

namespace tropdepth {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

class PolyLexer {
 public:
  PolyLexer(std::string_view s, std::size_t n) : s_(s), n_(n) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(sign));
      skip();
    }
    return Polynomial(n_, std::move(terms));
  }

 private:
  Term term(int sign) {
    Rational c(1);
    ExponentVector m(n_);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      have_factor = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      } else {
        return Term{c * sign, m};
      }
    }
    for (;;) {
      if (peek() != 'x') fail(have_factor ? "expected variable after '*'" : "expected term");
      ++pos_;
      const long idx = integer_literal();
      if (idx < 1 || static_cast<std::size_t>(idx) > n_) {
        fail("variable x" + std::to_string(idx) + " outside ring of " + std::to_string(n_) + " variables");
      }
      long e = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        e = integer_literal();
        skip();
      }
      m[static_cast<std::size_t>(idx - 1)] += static_cast<int>(e);
      have_factor = true;
      if (peek() != '*') break;
      ++pos_;
      skip();
    }
    return Term{c * sign, m};
  }

  Rational coefficient() {
    const std::size_t start = pos_;
    digits();
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      digits();
    }
    Rational q;
    if (q.set_str(std::string(s_.substr(start, pos_ - start)), 10) != 0) fail("bad coefficient");
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  }

  long integer_literal() {
    const std::size_t start = pos_;
    digits();
    if (pos_ == start) fail("expected integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void digits() {
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" +
                     std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  return detail::PolyLexer(text, n).parse();
}

inline std::string to_string(const ExponentVector& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    if (t.monomial.is_one()) {
      s += c.get_str();
    } else if (c == 1) {
      s += to_string(t.monomial);
    } else {
      s += c.get_str() + "*" + to_string(t.monomial);
    }
  }
  return s;
}

}  // namespace tropdepth
