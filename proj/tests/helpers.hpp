// Shared fixtures and independent oracles for the test suites.
#pragma once

#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "tropdepth/tropdepth.hpp"

namespace testing_support {

using namespace tropdepth;

inline Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, n); }

inline Ideal make_ideal(std::size_t n, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, n));
  return Ideal(n, std::move(ps));
}

/// Canonical a/b; GMP comparisons assume canonical form.
inline Rational Q(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline ExponentVector E(std::vector<int> e) { return ExponentVector(std::move(e)); }

inline MonomialIdeal M(std::size_t n, const std::vector<std::vector<int>>& gens) {
  std::vector<ExponentVector> g;
  for (const auto& e : gens) g.emplace_back(e);
  return MonomialIdeal(n, std::move(g));
}

/// (x1, ..., x_{n-m-1}, x_{n-m}^2, x_{n-m} x_{n-m+1}, ..., x_{n-m} x_{n-t}).
inline Ideal stable_family(std::size_t n, int m, int t) {
  std::vector<Polynomial> g;
  const std::size_t p = n - static_cast<std::size_t>(m) - 1;  // 0-based index of x_{n-m}
  for (std::size_t i = 0; i < p; ++i) g.push_back(Polynomial::variable(n, i));
  for (std::size_t k = p; k < n - static_cast<std::size_t>(t); ++k) {
    g.push_back(Polynomial::variable(n, p) * Polynomial::variable(n, k));
  }
  return Ideal(n, std::move(g));
}

inline Ideal borel_example() { return make_ideal(5, {"x1^2", "x1*x2", "x1*x3^2", "x1*x3*x4"}); }

/// (x_i (x1 + x2) : i <= k) in n variables.
inline Ideal depth_family(std::size_t n, std::size_t k) {
  std::vector<Polynomial> g;
  const Polynomial l = Polynomial::variable(n, 0) + Polynomial::variable(n, 1);
  for (std::size_t i = 0; i < k; ++i) g.push_back(Polynomial::variable(n, i) * l);
  return Ideal(n, std::move(g));
}

/// x1 ... xk (x1 + x2) in k variables.
inline Polynomial f_k(std::size_t k) {
  Polynomial f = Polynomial::variable(k, 0) + Polynomial::variable(k, 1);
  for (std::size_t i = 0; i < k; ++i) f = f * Polynomial::variable(k, i);
  return f;
}

/// Every monomial of total degree d in n variables, in lexicographic order.
inline std::vector<ExponentVector> monomials_of_degree(std::size_t n, int d) {
  std::vector<ExponentVector> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

/// Random homogeneous polynomial of degree d with small integer coefficients.
inline Polynomial random_homogeneous(Rng& rng, std::size_t n, int d, int max_terms, int coeff = 5) {
  const auto monos = monomials_of_degree(n, d);
  std::vector<Term> ts;
  const int k = rng.uniform(1, max_terms);
  for (int i = 0; i < k; ++i) {
    int c = 0;
    while (c == 0) c = rng.uniform(-coeff, coeff);
    ts.push_back(Term{Rational(c), monos[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(monos.size()) - 1))]});
  }
  Polynomial p(n, std::move(ts));
  return p.is_zero() ? Polynomial::monomial(monos.front()) : p;
}

inline Polynomial random_polynomial(Rng& rng, std::size_t n, int max_deg, int max_terms) {
  Polynomial p(n);
  for (int i = 0; i < max_terms; ++i) p = p + random_homogeneous(rng, n, rng.uniform(0, max_deg), 1);
  return p;
}

inline Ideal random_graded_ideal(Rng& rng, std::size_t n, int max_deg, int gens, int max_terms = 4) {
  std::vector<Polynomial> g;
  for (int i = 0; i < gens; ++i) g.push_back(random_homogeneous(rng, n, rng.uniform(1, max_deg), max_terms));
  return Ideal(n, std::move(g));
}

inline ExponentVector random_exponent(Rng& rng, std::size_t n, int max_e) {
  std::vector<int> e(n);
  for (auto& x : e) x = rng.uniform(0, max_e);
  return ExponentVector(e);
}

/// Rank of a rational matrix by Gaussian elimination.
inline std::size_t rank_of(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Independent membership test for graded ideals: f lies in I iff each
/// homogeneous component of degree D lies in the span of {u g : deg(u g) = D}.
inline bool brute_force_member(const std::vector<Polynomial>& gens, const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : f.terms()) parts[t.monomial.degree()].push_back(t);
  for (const auto& [D, ts] : parts) {
    const auto basis = monomials_of_degree(n, D);
    std::map<ExponentVector, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
      if (g.is_zero() || g.degree() > D) continue;
      for (const auto& u : monomials_of_degree(n, D - g.degree())) {
        std::vector<Rational> row(basis.size(), Rational(0));
        for (const auto& t : g.terms()) row[col.at(t.monomial + u)] += t.coefficient;
        rows.push_back(std::move(row));
      }
    }
    const std::size_t r0 = rank_of(rows);
    std::vector<Rational> target(basis.size(), Rational(0));
    for (const auto& t : ts) target[col.at(t.monomial)] = t.coefficient;
    rows.push_back(std::move(target));
    if (rank_of(std::move(rows)) != r0) return false;
  }
  return true;
}

/// Number of monomials of degree d outside the monomial ideal.
inline long standard_monomials(const MonomialIdeal& M, int d) {
  long c = 0;
  for (const auto& u : monomials_of_degree(M.nvars(), d)) c += M.contains(u) ? 0 : 1;
  return c;
}

inline std::vector<int> iota_vector(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace testing_support

namespace tropdepth {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const ExponentVector& e, std::ostream* os) { *os << to_string(e); }
inline void PrintTo(const WeightVector& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const ConeId& c, std::ostream* os) { *os << to_string(c); }

}  // namespace tropdepth
