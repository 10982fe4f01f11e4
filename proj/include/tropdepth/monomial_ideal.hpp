// Monomial ideals: minimal generators, Krull dimension, Hilbert series,
// strong stability and the depth of strongly stable ideals.
#pragma once

#include <algorithm>
#include <vector>

#include "tropdepth/poly.hpp"
#include "tropdepth/text.hpp"

namespace tropdepth {

/// A monomial ideal kept in its unique minimal generating set, sorted
/// descending in grevlex.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> gens) : n_(n) {
    for (const auto& g : gens) require_same_size(n, g.size(), "monomial ideal generator");
    gens_ = minimal_subset(std::move(gens));
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) { return g.is_one(); });
  }

  bool contains(const ExponentVector& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(m); });
  }

  int max_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  /// M + (x_var)
  MonomialIdeal plus_variable(std::size_t var) const {
    std::vector<ExponentVector> g = gens_;
    g.push_back(ExponentVector::unit(n_, var));
    return MonomialIdeal(n_, std::move(g));
  }

  /// M : x_var
  MonomialIdeal colon_variable(std::size_t var) const {
    std::vector<ExponentVector> g = gens_;
    for (auto& m : g) {
      if (m[var] > 0) --m[var];
    }
    return MonomialIdeal(n_, std::move(g));
  }

  std::vector<std::string> generator_strings() const {
    std::vector<std::string> s;
    for (const auto& g : gens_) s.push_back(to_string(g));
    std::sort(s.begin(), s.end());
    return s;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  static std::vector<ExponentVector> minimal_subset(std::vector<ExponentVector> g) {
    const MonomialOrder ord(OrderSpec::grevlex(g.empty() ? 0 : g.front().size()));
    std::sort(g.begin(), g.end(), [&](const ExponentVector& a, const ExponentVector& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return ord.greater(a, b);
    });
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<ExponentVector> out;
    for (auto& m : g) {
      if (std::none_of(out.begin(), out.end(), [&](const ExponentVector& k) { return k.divides(m); })) {
        out.push_back(std::move(m));
      }
    }
    std::sort(out.begin(), out.end(), [&](const ExponentVector& a, const ExponentVector& b) { return ord.greater(a, b); });
    return out;
  }

  std::size_t n_ = 0;
  std::vector<ExponentVector> gens_;
};

inline MonomialIdeal minimalize(const std::vector<ExponentVector>& gens) {
  if (gens.empty()) throw std::invalid_argument("minimalize: empty generator list");
  return MonomialIdeal(gens.front().size(), gens);
}

/// Krull dimension of S/M: n minus the smallest number of variables meeting
/// the support of every minimal generator.
inline int monomial_dimension(const MonomialIdeal& M) {
  if (M.is_unit()) throw std::invalid_argument("monomial_dimension: the unit ideal has no dimension");
  const std::size_t n = M.nvars();
  if (M.is_zero()) return static_cast<int>(n);
  if (n > 24) throw std::invalid_argument("monomial_dimension: too many variables");
  std::vector<unsigned> supports;
  for (const auto& g : M.generators()) {
    unsigned s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] > 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    // Enumerate k-subsets in lexicographic bitmask order.
    unsigned mask = (1u << k) - 1;
    const unsigned limit = 1u << n;
    while (mask < limit) {
      if (std::all_of(supports.begin(), supports.end(), [mask](unsigned s) { return (s & mask) != 0; })) {
        return static_cast<int>(n - k);
      }
      const unsigned c = mask & -mask;
      const unsigned r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return 0;
}

/// Dense univariate integer polynomial, coefficient i of t^i.
using UPoly = std::vector<Integer>;

namespace detail {

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_add(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline Integer upoly_at_one(const UPoly& p) {
  Integer s = 0;
  for (const auto& c : p) s += c;
  return s;
}

/// p / (1 - t), exact when p(1) = 0.
inline UPoly divide_one_minus_t(const UPoly& p) {
  // p = (1 - t) q  =>  q_i = p_0 + ... + p_i
  UPoly q(p.size() > 1 ? p.size() - 1 : 0, 0);
  Integer acc = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    acc += p[i];
    q[i] = acc;
  }
  trim(q);
  return q;
}

}  // namespace detail

enum class PivotRule {
  MostFrequent,  ///< variable dividing the most minimal generators
  FirstShared,   ///< lowest-index variable dividing at least two minimal generators
};

namespace detail {

/// Numerator N(M) of the Hilbert series N(M)/(1-t)^n of S/M.
inline UPoly hilbert_numerator(const MonomialIdeal& M, PivotRule rule) {
  if (M.is_zero()) return {1};
  if (M.is_unit()) return {};
  const std::size_t n = M.nvars();
  const auto& gens = M.generators();
  std::vector<int> count(n, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] > 0) ++count[i];
    }
  }
  int pivot = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count[i] < 2) continue;
    if (rule == PivotRule::FirstShared) {
      pivot = static_cast<int>(i);
      break;
    }
    if (pivot < 0 || count[i] > count[static_cast<std::size_t>(pivot)]) pivot = static_cast<int>(i);
  }
  if (pivot < 0) {
    // Pairwise coprime generators: a complete intersection.
    UPoly r{1};
    for (const auto& g : gens) {
      UPoly f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      r = upoly_mul(r, f);
    }
    return r;
  }
  const auto p = static_cast<std::size_t>(pivot);
  UPoly a = hilbert_numerator(M.plus_variable(p), rule);
  UPoly b = hilbert_numerator(M.colon_variable(p), rule);
  b.insert(b.begin(), Integer(0));
  trim(b);
  return upoly_add(std::move(a), b);
}

}  // namespace detail

/// Hilbert series of S/M in reduced form Q(t)/(1-t)^d with Q(1) != 0.
struct HilbertData {
  UPoly numerator;
  int dimension = 0;
  Integer multiplicity;
};

inline HilbertData hilbert(const MonomialIdeal& M, PivotRule rule = PivotRule::MostFrequent) {
  if (M.is_unit()) throw std::invalid_argument("hilbert: the unit ideal is not proper");
  HilbertData h;
  h.numerator = detail::hilbert_numerator(M, rule);
  int d = static_cast<int>(M.nvars());
  while (detail::upoly_at_one(h.numerator) == 0) {
    h.numerator = detail::divide_one_minus_t(h.numerator);
    --d;
  }
  h.dimension = d;
  h.multiplicity = detail::upoly_at_one(h.numerator);
  if (d != monomial_dimension(M)) throw std::logic_error("hilbert: dimension cross-check failed");
  return h;
}

/// Coefficients 0..max_degree of the power series Q(t)/(1-t)^d.
inline std::vector<Integer> hilbert_function(const HilbertData& h, int max_degree) {
  std::vector<Integer> series(static_cast<std::size_t>(max_degree) + 1, 0);
  for (std::size_t i = 0; i < h.numerator.size() && i < series.size(); ++i) series[i] = h.numerator[i];
  for (int k = 0; k < h.dimension; ++k) {
    for (std::size_t i = 1; i < series.size(); ++i) series[i] += series[i - 1];
  }
  return series;
}

/// Closed under x_{perm[j]} u / x_{perm[k]} for every x_{perm[k]} | u and j < k.
inline bool is_strongly_stable(const MonomialIdeal& M, const std::vector<int>& perm) {
  require_same_size(M.nvars(), perm.size(), "is_strongly_stable");
  for (const auto& u : M.generators()) {
    for (std::size_t k = 0; k < perm.size(); ++k) {
      const auto vk = static_cast<std::size_t>(perm[k]);
      if (u[vk] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        ExponentVector w = u;
        --w[vk];
        ++w[static_cast<std::size_t>(perm[j])];
        if (!M.contains(w)) return false;
      }
    }
  }
  return true;
}

inline bool is_strongly_stable(const MonomialIdeal& M) {
  return is_strongly_stable(M, OrderSpec::identity(M.nvars()));
}

/// depth(S/M) = n - (largest index of a variable dividing a minimal generator),
/// valid for M strongly stable with respect to x1 > ... > xn.
inline int depth_of_stable(const MonomialIdeal& M) {
  if (M.is_zero() || M.is_unit()) throw std::invalid_argument("depth_of_stable: proper nonzero ideal required");
  if (!is_strongly_stable(M)) throw std::invalid_argument("depth_of_stable: ideal is not strongly stable");
  int last = -1;
  for (const auto& g : M.generators()) last = std::max(last, g.last_variable());
  return static_cast<int>(M.nvars()) - (last + 1);
}

}  // namespace tropdepth
