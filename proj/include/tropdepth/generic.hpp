// Sampled generic tropical varieties: membership, cone constancy, the
// separating witness for non-CM ideals, CM classification and depth recovery.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tropdepth/fans.hpp"
#include "tropdepth/groebner.hpp"
#include "tropdepth/invariants.hpp"
#include "tropdepth/transform.hpp"

namespace tropdepth {

namespace detail {

/// Agreement of a per-transform verdict across the samples of one family.
template <class F>
auto agreed(const GenericFamily& family, F&& f, const std::string& what) {
  return family.agree([&](const Ideal& gi, int) { return f(gi); }, what);
}

inline int require_positive_dimension(const Ideal& I, const char* what) {
  const int m = dimension(I);
  if (m == 0) throw std::invalid_argument(std::string(what) + ": zero-dimensional ideals have empty tropical variety");
  return m;
}

/// grevlex with x_a and x_b exchanged in the variable ordering.
inline OrderSpec grevlex_swapped(std::size_t n, int a, int b) {
  std::vector<int> perm = iota(n);
  std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return OrderSpec::grevlex(perm);
}

/// grevlex with x_v moved to the end of the variable ordering.
inline OrderSpec grevlex_moved_last(std::size_t n, int v) {
  std::vector<int> perm;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) != v) perm.push_back(static_cast<int>(i));
  }
  perm.push_back(v);
  return OrderSpec::grevlex(perm);
}

}  // namespace detail

/// omega lies in T(g(I)) for generic g: in_omega(g(I)) contains no monomial.
inline bool tropical_member(const GenericFamily& family, const WeightVector& omega) {
  detail::require_positive_dimension(family.base(), "tropical_member");
  return detail::agreed(
      family, [&](const Ideal& gi) { return !contains_monomial(initial_ideal(gi, omega)); }, "tropical_member");
}

inline bool tropical_member(const Ideal& I, const WeightVector& omega, const GenericityPolicy& policy = {}) {
  return tropical_member(GenericFamily(I, policy), omega);
}

/// Gap for interior points: one more than the largest generator degree of gin.
inline long interior_gap(const GenericFamily& family) {
  return gin(family, OrderSpec::grevlex(family.nvars())).max_degree() + 1;
}

/// Two interior points of one cone with different initial ideals.
struct ConstancyWitness {
  WeightVector first;
  WeightVector second;
};

namespace detail {

inline std::optional<ConstancyWitness> constancy_witness(const Ideal& gi, const ConeId& c, int points, long gap,
                                                        std::uint64_t seed) {
  const WeightVector w0 = sample_interior_point(c, gap, 0, seed);
  const Ideal in0 = initial_ideal(gi, w0);
  for (int j = 1; j < points; ++j) {
    const WeightVector wj = sample_interior_point(c, gap, j, seed);
    if (!ideal_equal(in0, initial_ideal(gi, wj))) return ConstancyWitness{w0, wj};
  }
  return std::nullopt;
}

}  // namespace detail

/// Whether in_w(g(I)) is the same for `points` >= 2 interior points of c.
inline bool cone_constancy(const GenericFamily& family, const ConeId& c, int points = 3) {
  if (points < 2) throw std::invalid_argument("cone_constancy: at least two interior points are required");
  if (c.n != family.nvars()) throw DimensionMismatch("cone_constancy: cone and ring differ in size");
  const long gap = interior_gap(family);
  const std::uint64_t seed = family.policy().seed;
  return detail::agreed(
      family, [&](const Ideal& gi) { return !detail::constancy_witness(gi, c, points, gap, seed).has_value(); },
      "cone_constancy");
}

inline bool cone_constancy(const Ideal& I, const ConeId& c, int points = 3, const GenericityPolicy& policy = {}) {
  return cone_constancy(GenericFamily(I, policy), c, points);
}

/// The first witness found on the level-0 transform, if any.
inline std::optional<ConstancyWitness> constancy_witness(const GenericFamily& family, const ConeId& c,
                                                         int points = 3) {
  return detail::constancy_witness(family.ideal(0, 0), c, points, interior_gap(family), family.policy().seed);
}

/// Whether the initial ideals of g(I) at two points differ (agreed verdict).
inline bool initial_ideals_differ(const GenericFamily& family, const WeightVector& a, const WeightVector& b) {
  return detail::agreed(
      family, [&](const Ideal& gi) { return !ideal_equal(initial_ideal(gi, a), initial_ideal(gi, b)); },
      "initial_ideals_differ");
}

struct SeparatingWitness {
  WeightVector omega;
  WeightVector v;
  long gap = 0;  ///< c + 1 with c the largest generator degree of both gins
  int depth = 0;
  int dimension = 0;
  bool distinct = false;
};

/// Two points of the cone {w_1 = ... = w_{n-m+1} = 0 < rest} whose ladders
/// differ by exchanging positions n-t and n-t+1 (1-based), t = depth(I).
inline SeparatingWitness separating_witness(const GenericFamily& family) {
  const std::size_t n = family.nvars();
  const int m = detail::require_positive_dimension(family.base(), "separating_witness");
  if (m < 3) throw std::invalid_argument("separating_witness: needs dimension at least 3");
  SeparatingWitness w;
  w.dimension = m;
  w.depth = depth(family);
  // 0-based positions p and p+1 of the exchanged pair, kept inside the ladder.
  int p = static_cast<int>(n) - w.depth - 1;
  p = std::clamp(p, static_cast<int>(n) - m + 1, static_cast<int>(n) - 2);
  const OrderSpec base = OrderSpec::grevlex(n);
  const OrderSpec swapped = detail::grevlex_swapped(n, p, p + 1);
  const long c = std::max(gin(family, base).max_degree(), gin(family, swapped).max_degree());
  w.gap = c + 1;
  std::vector<int> ladder;
  for (std::size_t i = n - static_cast<std::size_t>(m) + 1; i < n; ++i) ladder.push_back(static_cast<int>(i));
  w.omega = ladder_point(n, ladder, w.gap);
  std::vector<int> ladder_v = ladder;
  std::swap(*std::find(ladder_v.begin(), ladder_v.end(), p), *std::find(ladder_v.begin(), ladder_v.end(), p + 1));
  w.v = ladder_point(n, ladder_v, w.gap);
  w.distinct = initial_ideals_differ(family, w.omega, w.v);
  return w;
}

inline SeparatingWitness separating_witness(const Ideal& I, const GenericityPolicy& policy = {}) {
  return separating_witness(GenericFamily(I, policy));
}

enum class CmClass { CM, AlmostCM, Neither, DepthZero };

inline const char* to_string(CmClass c) {
  switch (c) {
    case CmClass::CM:
      return "CM";
    case CmClass::AlmostCM:
      return "almostCM";
    case CmClass::Neither:
      return "neither";
    case CmClass::DepthZero:
      return "depthZero";
  }
  return "?";
}

struct CmEvidence {
  CmClass cls = CmClass::Neither;
  int dimension = 0;
  int depth = 0;
  std::optional<SeparatingWitness> witness;  ///< checked for "neither"
  int cones_checked = 0;                     ///< maximal W_n^m cones sampled for CM / almostCM
  int cones_constant = 0;
  bool consistent = true;                    ///< cross-checks agree with the depth-based class
};

/// Class from depth t and dimension m: CM when t = m, then almost CM when
/// t = m - 1, then depth zero, otherwise neither.
inline CmClass cm_class_of(int depth_value, int dim) {
  if (depth_value == dim) return CmClass::CM;
  if (depth_value == dim - 1) return CmClass::AlmostCM;
  if (depth_value == 0) return CmClass::DepthZero;
  return CmClass::Neither;
}

inline CmEvidence classify_cm(const GenericFamily& family, bool cross_validate = true, int points = 3) {
  CmEvidence e;
  e.dimension = detail::require_positive_dimension(family.base(), "classify_cm");
  e.depth = depth(family);
  e.cls = cm_class_of(e.depth, e.dimension);
  if (!cross_validate) return e;
  if (e.cls == CmClass::Neither) {
    e.witness = separating_witness(family);
    e.consistent = e.witness->distinct;
  } else if (e.cls == CmClass::CM || e.cls == CmClass::AlmostCM) {
    for (const auto& c : maximal_cones(family.nvars(), e.dimension)) {
      ++e.cones_checked;
      if (cone_constancy(family, c, points)) ++e.cones_constant;
    }
    e.consistent = e.cones_constant == e.cones_checked;
  }
  return e;
}

inline CmEvidence classify_cm(const Ideal& I, const GenericityPolicy& policy = {}) {
  return classify_cm(GenericFamily(I, policy));
}

namespace detail {

/// w + lambda e_j with the moved coordinate above c times the largest entry.
inline WeightVector ray_probe(const WeightVector& w, const std::vector<int>& dirs, long c) {
  WeightVector out = w;
  const Rational push = Rational(c) * w.max() + 1;
  for (int j : dirs) out[static_cast<std::size_t>(j)] += push;
  return out;
}

inline bool ray_constancy_on(const Ideal& gi, const WeightVector& w, const std::vector<int>& dirs, long c) {
  const Ideal base = initial_ideal(gi, w);
  for (int j : dirs) {
    if (!ideal_equal(base, initial_ideal(gi, ray_probe(w, {j}, c)))) return false;
  }
  if (dirs.size() > 1 && !ideal_equal(base, initial_ideal(gi, ray_probe(w, dirs, c)))) return false;
  return true;
}

}  // namespace detail

/// Whether moving far along each direction in D (and along their sum) keeps
/// the initial ideal; c is the degree bound of the ladder construction.
inline bool ray_constancy(const GenericFamily& family, const WeightVector& w, const std::vector<int>& dirs, long c) {
  require_same_size(family.nvars(), w.size(), "ray_constancy");
  for (int j : dirs) {
    if (j < 0 || static_cast<std::size_t>(j) >= family.nvars()) throw std::out_of_range("ray_constancy: direction");
  }
  return detail::agreed(
      family, [&](const Ideal& gi) { return detail::ray_constancy_on(gi, w, dirs, c); }, "ray_constancy");
}

struct DepthRecovery {
  WeightVector omega;
  long c = 0;
  int depth = 0;  ///< recovered value
};

/// Degree bound over the generic initial ideals of the grevlex orders used by
/// the ray test: the standard one and those with x_{n-t} moved last.
inline long ray_degree_bound(const GenericFamily& family, int m) {
  const std::size_t n = family.nvars();
  long c = gin(family, OrderSpec::grevlex(n)).max_degree();
  for (int t = 0; t <= m; ++t) {
    const int v = static_cast<int>(n) - t - 1;
    if (v < 0) break;
    c = std::max<long>(c, gin(family, detail::grevlex_moved_last(n, v)).max_degree());
  }
  return c;
}

/// Depth from the ray test: the t for which the rays along the last t
/// coordinates keep the initial ideal while adding coordinate n-t breaks it.
inline DepthRecovery recover_depth(const GenericFamily& family, bool check_hypothesis = true) {
  const std::size_t n = family.nvars();
  const int m = detail::require_positive_dimension(family.base(), "recover_depth");
  if (check_hypothesis) {
    const int t = depth(family);
    if (!(0 < t && t < m - 1)) {
      throw std::invalid_argument("recover_depth: needs 0 < depth < dimension - 1 (depth " + std::to_string(t) +
                                  ", dimension " + std::to_string(m) + ")");
    }
  }
  DepthRecovery r;
  r.c = ray_degree_bound(family, m);
  std::vector<int> ladder;
  for (std::size_t i = n - static_cast<std::size_t>(m) + 1; i < n; ++i) ladder.push_back(static_cast<int>(i));
  r.omega = ladder_point(n, ladder, r.c + 1);
  r.depth = detail::agreed(
      family,
      [&](const Ideal& gi) {
        std::vector<int> dirs;
        for (int t = 0; t < static_cast<int>(n); ++t) {
          std::vector<int> wider = dirs;
          wider.insert(wider.begin(), static_cast<int>(n) - t - 1);
          if (!detail::ray_constancy_on(gi, r.omega, wider, r.c)) return t;
          dirs = std::move(wider);
        }
        return static_cast<int>(n);
      },
      "recover_depth");
  return r;
}

inline DepthRecovery recover_depth(const Ideal& I, const GenericityPolicy& policy = {}) {
  return recover_depth(GenericFamily(I, policy));
}

}  // namespace tropdepth
