// Invariants of S/I read off leading and generic initial ideals.
#pragma once

#include "tropdepth/groebner.hpp"
#include "tropdepth/monomial_ideal.hpp"
#include "tropdepth/transform.hpp"

namespace tropdepth {

inline MonomialIdeal leading_monomial_ideal(const Ideal& I, const OrderSpec& order) {
  return MonomialIdeal(I.nvars(), leading_monomials(I, order));
}

inline MonomialIdeal leading_monomial_ideal(const Ideal& I) {
  return leading_monomial_ideal(I, OrderSpec::grevlex(I.nvars()));
}

namespace detail {

inline MonomialIdeal proper_leading_ideal(const Ideal& I, const char* what) {
  if (I.is_zero()) throw std::invalid_argument(std::string(what) + ": the zero ideal is not supported");
  MonomialIdeal M = leading_monomial_ideal(I);
  if (M.is_unit()) throw std::invalid_argument(std::string(what) + ": the unit ideal has no invariants");
  return M;
}

}  // namespace detail

/// Krull dimension of S/I.
inline int dimension(const Ideal& I) { return monomial_dimension(detail::proper_leading_ideal(I, "dimension")); }

inline HilbertData hilbert(const Ideal& I) { return hilbert(detail::proper_leading_ideal(I, "hilbert")); }

inline Integer multiplicity(const Ideal& I) { return hilbert(I).multiplicity; }

/// depth(S/I) through gin w.r.t. grevlex, which preserves depth.
inline int depth(const GenericFamily& family) {
  const MonomialIdeal g = gin(family, OrderSpec::grevlex(family.nvars()));
  if (g.is_unit()) throw std::invalid_argument("depth: the unit ideal has no depth");
  return depth_of_stable(g);
}

inline int depth(const Ideal& I, const GenericityPolicy& policy = {}) { return depth(GenericFamily(I, policy)); }

}  // namespace tropdepth
