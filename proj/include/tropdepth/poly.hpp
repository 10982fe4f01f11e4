// Exact multivariate polynomials over the rationals, term orders and
// weight-refined term orders.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropdepth {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when two objects living in rings with different variable counts meet.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": variable count mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

/// The exponent vector of a monomial x^nu. Indices are 0-based: entry i is the
/// exponent of x_{i+1}.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) { check(); }
  ExponentVector(std::initializer_list<int> e) : e_(e) { check(); }

  static ExponentVector unit(std::size_t n, std::size_t i, int power = 1) {
    ExponentVector v(n);
    v.e_.at(i) = power;
    return v;
  }

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<int>& data() const noexcept { return e_; }

  int degree() const noexcept { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }

  /// True iff this monomial divides `other`.
  bool divides(const ExponentVector& other) const {
    require_same_size(size(), other.size(), "divides");
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }

  bool coprime(const ExponentVector& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    }
    return true;
  }

  /// Highest 0-based variable index with a nonzero exponent, or -1 for the unit monomial.
  int last_variable() const noexcept {
    for (std::size_t i = e_.size(); i-- > 0;) {
      if (e_[i] != 0) return static_cast<int>(i);
    }
    return -1;
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    require_same_size(size(), o.size(), "monomial product");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

  /// a / b; requires b | a.
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    require_same_size(a.size(), b.size(), "monomial quotient");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.e_[i] = a.e_[i] - b.e_[i];
      if (r.e_[i] < 0) throw std::invalid_argument("monomial quotient: divisor does not divide");
    }
    return r;
  }

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    require_same_size(a.size(), b.size(), "lcm");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  void check() const {
    for (int x : e_) {
      if (x < 0) throw std::invalid_argument("exponent vector: negative exponent");
    }
  }
  std::vector<int> e_;
};

struct Term {
  Rational coefficient;
  ExponentVector monomial;

  friend bool operator==(const Term& a, const Term& b) {
    return a.coefficient == b.coefficient && a.monomial == b.monomial;
  }
};

/// A weight vector omega; entry i weighs x_{i+1}.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t n) : w_(n, Rational(0)) {}
  explicit WeightVector(std::vector<Rational> w) : w_(std::move(w)) {}
  WeightVector(std::initializer_list<long> w) {
    for (long x : w) w_.emplace_back(x);
  }

  std::size_t size() const noexcept { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  Rational& operator[](std::size_t i) { return w_[i]; }
  const std::vector<Rational>& data() const noexcept { return w_; }

  Rational min() const {
    if (w_.empty()) return Rational(0);
    return *std::min_element(w_.begin(), w_.end());
  }
  Rational max() const {
    if (w_.empty()) return Rational(0);
    return *std::max_element(w_.begin(), w_.end());
  }

  /// omega - min(omega) * (1,...,1); the representative used for graded ideals.
  WeightVector normalized() const {
    WeightVector r = *this;
    const Rational lo = min();
    for (auto& x : r.w_) x -= lo;
    return r;
  }

  /// lambda * omega + shift * (1,...,1)
  WeightVector affine(const Rational& lambda, const Rational& shift) const {
    WeightVector r = *this;
    for (auto& x : r.w_) x = lambda * x + shift;
    return r;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (i) s += ",";
      s += w_[i].get_str();
    }
    return s + ")";
  }

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }

 private:
  std::vector<Rational> w_;
};

inline Rational weight(const WeightVector& omega, const ExponentVector& m) {
  require_same_size(omega.size(), m.size(), "weight");
  Rational s(0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) s += omega[i] * m[i];
  }
  return s;
}

enum class BaseOrder { Lex, Grevlex };

/// A term order: lex or grevlex on a permutation of the variables, optionally
/// refined by a weight vector (smaller weight ranks higher) and optionally
/// preceded by an elimination block (larger block degree ranks higher).
///
/// `permutation[0]` is the largest variable.
struct OrderSpec {
  BaseOrder base = BaseOrder::Grevlex;
  std::vector<int> permutation;
  std::optional<WeightVector> refinement;
  std::vector<bool> elimination;

  static OrderSpec grevlex(std::size_t n) { return {BaseOrder::Grevlex, identity(n), {}, {}}; }
  static OrderSpec lex(std::size_t n) { return {BaseOrder::Lex, identity(n), {}, {}}; }
  static OrderSpec grevlex(std::vector<int> perm) {
    OrderSpec o{BaseOrder::Grevlex, std::move(perm), {}, {}};
    o.validate();
    return o;
  }
  static OrderSpec lex(std::vector<int> perm) {
    OrderSpec o{BaseOrder::Lex, std::move(perm), {}, {}};
    o.validate();
    return o;
  }

  std::size_t size() const noexcept { return permutation.size(); }

  OrderSpec refined(WeightVector omega) const {
    require_same_size(size(), omega.size(), "order refinement");
    OrderSpec o = *this;
    o.refinement = std::move(omega);
    return o;
  }

  OrderSpec unrefined() const {
    OrderSpec o = *this;
    o.refinement.reset();
    return o;
  }

  bool is_plain() const { return !refinement && elimination.empty(); }

  void validate() const {
    std::vector<int> p = permutation;
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != static_cast<int>(i)) throw std::invalid_argument("order: not a permutation");
    }
    if (refinement) require_same_size(size(), refinement->size(), "order refinement");
    if (!elimination.empty()) require_same_size(size(), elimination.size(), "elimination block");
  }

  /// Canonical text key; equal keys denote equal orders.
  std::string key() const {
    std::string s = base == BaseOrder::Lex ? "lex[" : "grevlex[";
    for (std::size_t i = 0; i < permutation.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(permutation[i]);
    }
    s += "]";
    if (refinement) s += "w" + refinement->to_string();
    if (!elimination.empty()) {
      s += "e";
      for (bool b : elimination) s += b ? '1' : '0';
    }
    return s;
  }

  static std::vector<int> identity(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }
};

/// An OrderSpec prepared for fast repeated comparisons: rational weights are
/// scaled to 64-bit integers (positive scaling preserves the order).
class MonomialOrder {
 public:
  explicit MonomialOrder(const OrderSpec& spec) : spec_(spec) {
    spec_.validate();
    if (spec_.refinement) {
      Integer den(1);
      for (const auto& w : spec_.refinement->data()) den = lcm(den, Integer(w.get_den()));
      weights_.reserve(spec_.size());
      for (const auto& w : spec_.refinement->data()) {
        Integer v = w.get_num() * (den / w.get_den());
        if (!v.fits_slong_p() || abs(v) > Integer(std::numeric_limits<std::int64_t>::max() >> 24)) {
          throw std::overflow_error("order: weight entries too large");
        }
        weights_.push_back(v.get_si());
      }
    }
  }

  const OrderSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return spec_.size(); }

  std::strong_ordering operator()(const ExponentVector& a, const ExponentVector& b) const {
    const std::size_t n = spec_.size();
    if (!spec_.elimination.empty()) {
      int da = 0, db = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (spec_.elimination[i]) {
          da += a[i];
          db += b[i];
        }
      }
      if (da != db) return da <=> db;
    }
    if (!weights_.empty()) {
      std::int64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return wb <=> wa;  // smaller weight ranks higher
    }
    if (spec_.base == BaseOrder::Grevlex) {
      const int dega = a.degree(), degb = b.degree();
      if (dega != degb) return dega <=> degb;
      for (std::size_t k = n; k-- > 0;) {
        const int v = spec_.permutation[k];
        if (a[v] != b[v]) return b[v] <=> a[v];
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const int v = spec_.permutation[k];
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }

  bool greater(const ExponentVector& a, const ExponentVector& b) const { return (*this)(a, b) > 0; }

 private:
  OrderSpec spec_;
  std::vector<std::int64_t> weights_;
};

inline std::strong_ordering compare(const OrderSpec& order, const ExponentVector& a,
                                    const ExponentVector& b) {
  require_same_size(order.size(), a.size(), "compare");
  require_same_size(order.size(), b.size(), "compare");
  return MonomialOrder(order)(a, b);
}

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}
  Polynomial(std::size_t n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial constant(std::size_t n, const Rational& c) {
    return Polynomial(n, {Term{c, ExponentVector(n)}});
  }
  static Polynomial monomial(const ExponentVector& m, const Rational& c = 1) {
    return Polynomial(m.size(), {Term{c, m}});
  }
  static Polynomial variable(std::size_t n, std::size_t i) {
    return monomial(ExponentVector::unit(n, i));
  }

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Terms sorted descending in grevlex with x1 > ... > xn.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().monomial.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.monomial.degree() == d; });
  }

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.size() == 1 && terms_.front().monomial.is_one(); }

  bool involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const Term& t) { return t.monomial[var] != 0; });
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    require_same_size(f.n_, g.n_, "polynomial sum");
    std::vector<Term> all = f.terms_;
    all.insert(all.end(), g.terms_.begin(), g.terms_.end());
    return Polynomial(f.n_, std::move(all));
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_size(f.n_, g.n_, "polynomial product");
    std::vector<Term> all;
    all.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_) {
      for (const auto& b : g.terms_) {
        all.push_back(Term{a.coefficient * b.coefficient, a.monomial + b.monomial});
      }
    }
    return Polynomial(f.n_, std::move(all));
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& f) {
    if (c == 0) return Polynomial(f.n_);
    Polynomial r = f;
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(n_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Scale so that the coefficient of the first canonical term is 1.
  Polynomial normalized_leading() const {
    if (terms_.empty()) return *this;
    return Rational(1) / terms_.front().coefficient * *this;
  }

  /// Same polynomial in a ring with `m >= n` variables (new variables appended).
  Polynomial embed(std::size_t m) const {
    if (m < n_) throw DimensionMismatch("embed: target ring is smaller");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<int> e = t.monomial.data();
      e.resize(m, 0);
      ts.push_back(Term{t.coefficient, ExponentVector(std::move(e))});
    }
    return Polynomial(m, std::move(ts));
  }

  /// Drop trailing variables; every term must be free of them.
  Polynomial restrict_to(std::size_t m) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
      std::vector<int> e = t.monomial.data();
      for (std::size_t i = m; i < e.size(); ++i) {
        if (e[i] != 0) throw std::invalid_argument("restrict: polynomial involves a dropped variable");
      }
      e.resize(m);
      ts.push_back(Term{t.coefficient, ExponentVector(std::move(e))});
    }
    return Polynomial(m, std::move(ts));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void canonicalize() {
    for (const auto& t : terms_) require_same_size(n_, t.monomial.size(), "polynomial term");
    const MonomialOrder ord(OrderSpec::grevlex(n_));
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coefficient += t.coefficient;
      } else {
        if (!out.empty() && out.back().coefficient == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coefficient == 0) out.pop_back();
    terms_ = std::move(out);
  }

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

inline Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }
inline Polynomial scale(const Rational& c, const Polynomial& f) { return c * f; }

/// Sum of the terms of f of minimal omega-weight.
inline Polynomial initial_form(const WeightVector& omega, const Polynomial& f) {
  require_same_size(omega.size(), f.nvars(), "initial_form");
  if (f.is_zero()) throw std::invalid_argument("initial_form: zero polynomial");
  std::vector<Rational> ws;
  ws.reserve(f.size());
  for (const auto& t : f.terms()) ws.push_back(weight(omega, t.monomial));
  const Rational lo = *std::min_element(ws.begin(), ws.end());
  std::vector<Term> keep;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (ws[i] == lo) keep.push_back(f.terms()[i]);
  }
  return Polynomial(f.nvars(), std::move(keep));
}

inline Term leading_term(const MonomialOrder& order, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

inline Term leading_term(const OrderSpec& order, const Polynomial& f) {
  require_same_size(order.size(), f.nvars(), "leading_term");
  return leading_term(MonomialOrder(order), f);
}

}  // namespace tropdepth
