// Multiplicities of maximal cones of generic tropical varieties, exact
// hypersurface multiplicities and Newton polytopes.
#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropdepth/fans.hpp"
#include "tropdepth/generic.hpp"
#include "tropdepth/groebner.hpp"
#include "tropdepth/invariants.hpp"

namespace tropdepth {

/// No top-dimensional minimal prime of J contains a monomial: every
/// J + (x_k) has dimension below m.
inline bool topdim_monomial_free(const Ideal& J, int m) {
  const std::size_t n = J.nvars();
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Polynomial> gens = J.generators();
    gens.push_back(Polynomial::variable(n, k));
    const Ideal Jk(n, std::move(gens), J.degree_cap());
    if (is_unit_ideal(Jk)) continue;
    if (dimension(Jk) >= m) return false;
  }
  return true;
}

struct MultiplicityReport {
  ConeId cone;
  WeightVector point;
  int dim_initial = 0;
  int dim_saturated = 0;
  bool topdim_monomial_free = false;
  Integer m_saturated = 0;
  Integer m_ideal = 0;
  bool matches = false;

  friend bool operator==(const MultiplicityReport&, const MultiplicityReport&) = default;
};

namespace detail {

inline MultiplicityReport multiplicity_on(const Ideal& gi, const ConeId& c, const WeightVector& w, int m,
                                          const Integer& m_ideal) {
  MultiplicityReport r;
  r.cone = c;
  r.point = w;
  r.m_ideal = m_ideal;
  const Ideal J = initial_ideal(gi, w);
  r.dim_initial = dimension(J);
  const Ideal sat = saturate(J, variable_product(J.nvars()));
  if (sat.is_zero() || is_unit_ideal(sat)) {
    r.dim_saturated = -1;
  } else {
    r.dim_saturated = dimension(sat);
    r.m_saturated = multiplicity(sat);
  }
  r.topdim_monomial_free = r.dim_initial == m && topdim_monomial_free(J, m);
  r.matches = r.dim_saturated == r.dim_initial && r.topdim_monomial_free && r.m_saturated == r.m_ideal;
  return r;
}

}  // namespace detail

/// m(C) as the multiplicity of (in_w(g(I)) : (x1...xn)^inf) at an interior
/// point w of c. This equals the sum of lengths over monomial-free
/// top-dimensional primes when those primes are linear, as they are for
/// generic g.
inline MultiplicityReport intrinsic_multiplicity(const GenericFamily& family, const ConeId& c) {
  const int m = detail::require_positive_dimension(family.base(), "intrinsic_multiplicity");
  if (c.n != family.nvars()) throw DimensionMismatch("intrinsic_multiplicity: cone and ring differ in size");
  const Integer m_ideal = multiplicity(family.base());
  const WeightVector w = interior_point(c, interior_gap(family));
  return detail::agreed(
      family, [&](const Ideal& gi) { return detail::multiplicity_on(gi, c, w, m, m_ideal); },
      "intrinsic_multiplicity");
}

inline MultiplicityReport intrinsic_multiplicity(const Ideal& I, const ConeId& c, const GenericityPolicy& policy = {}) {
  return intrinsic_multiplicity(GenericFamily(I, policy), c);
}

/// Sum of the exponents of the non-monomial factors of in_w(f), given the
/// factorization of in_w(f) (checked up to a nonzero constant).
inline int hypersurface_mc(const Polynomial& f, const std::vector<std::pair<Polynomial, int>>& factors,
                           const WeightVector& w) {
  const Polynomial in = initial_form(w, f);
  Polynomial prod = Polynomial::constant(f.nvars(), 1);
  int total = 0;
  for (const auto& [p, e] : factors) {
    if (p.is_zero() || p.is_constant() || e < 1) {
      throw std::invalid_argument("hypersurface_mc: factors must be non-constant with positive exponent");
    }
    require_same_size(f.nvars(), p.nvars(), "hypersurface_mc");
    prod = prod * p.pow(e);
    if (!p.is_monomial()) total += e;
  }
  if (prod.normalized_leading() != in.normalized_leading()) {
    throw std::invalid_argument("hypersurface_mc: factors do not multiply to in_w(f) = " + to_string(in));
  }
  return total;
}

struct NewtonPolytope {
  std::vector<ExponentVector> vertices;  ///< sorted ascending
};

namespace detail {

/// Whether b = A x has a solution x >= 0, decided by phase-one simplex with
/// Bland's rule over the rationals. A is rows x cols.
inline bool feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  // Tableau columns: original variables, one artificial per row, rhs.
  const std::size_t width = cols + rows + 1;
  std::vector<std::vector<Rational>> T(rows + 1, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const int sign = b[r] < 0 ? -1 : 1;
    for (std::size_t c = 0; c < cols; ++c) T[r][c] = A[r][c] * sign;
    T[r][cols + r] = 1;
    T[r][width - 1] = b[r] * sign;
    basis[r] = cols + r;
  }
  // Objective row: minimize the sum of artificials, reduced by the basis.
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (c < cols || c == width - 1) T[rows][c] -= T[r][c];
    }
  }
  for (;;) {
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (T[rows][c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (T[r][enter] <= 0) continue;
      const Rational ratio = T[r][width - 1] / T[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen for phase one
    const Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || T[r][enter] == 0) continue;
      const Rational f = T[r][enter];
      for (std::size_t c = 0; c < width; ++c) T[r][c] -= f * T[leave][c];
    }
    basis[leave] = enter;
  }
  return T[rows][width - 1] == 0;
}

}  // namespace detail

inline constexpr std::size_t kNewtonMaxVariables = 8;

/// Vertices of the convex hull of the exponent vectors of f.
inline NewtonPolytope newton_polytope(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_polytope: zero polynomial");
  const std::size_t n = f.nvars();
  if (n > kNewtonMaxVariables) throw std::invalid_argument("newton_polytope: at most 8 variables");
  std::vector<ExponentVector> pts;
  for (const auto& t : f.terms()) pts.push_back(t.monomial);
  std::sort(pts.begin(), pts.end());
  NewtonPolytope P;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(j);
    }
    bool vertex = true;
    if (!others.empty()) {
      std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(others.size()));
      std::vector<Rational> b(n + 1);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < others.size(); ++k) A[r][k] = pts[others[k]][r];
        b[r] = pts[i][r];
      }
      for (std::size_t k = 0; k < others.size(); ++k) A[n][k] = 1;
      b[n] = 1;
      vertex = !detail::feasible(A, b);
    }
    if (vertex) P.vertices.push_back(pts[i]);
  }
  return P;
}

/// Number of lattice points on the segment [a, b] minus one.
inline long edge_lattice_length(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a.size(), b.size(), "edge_lattice_length");
  if (a == b) throw std::invalid_argument("edge_lattice_length: endpoints coincide");
  long g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) g = std::gcd(g, static_cast<long>(std::abs(a[i] - b[i])));
  return g;
}

}  // namespace tropdepth
