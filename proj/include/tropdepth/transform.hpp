// Random linear coordinate changes x_i -> sum_j g_{ji} x_j and the sampling
// policy used to stand in for "a generic g".
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tropdepth/groebner.hpp"
#include "tropdepth/monomial_ideal.hpp"

namespace tropdepth {

/// Independent transforms disagreed on a quantity that must be generic.
class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenericityPolicy {
  int samples = 2;            ///< transforms that must agree (k >= 2)
  std::int64_t bound = 1000;  ///< entries drawn from [-bound, bound]
  std::uint64_t seed = 0;
  int escalations = 2;        ///< retries, each with the bound multiplied by 100
  bool identity = false;      ///< testing hook: use the identity transform only

  void validate() const {
    if (identity) return;
    if (samples < 2) throw std::invalid_argument("genericity policy: at least two samples are required");
    if (bound < 1) throw std::invalid_argument("genericity policy: bound must be at least 1");
    if (escalations < 0) throw std::invalid_argument("genericity policy: negative escalation count");
  }
};

struct Transform {
  std::vector<std::vector<Rational>> matrix;  ///< matrix[j][i] = g_{ji}
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::int64_t bound = 0;

  std::size_t size() const noexcept { return matrix.size(); }

  static Transform identity(std::size_t n) {
    Transform g;
    g.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) g.matrix[i][i] = 1;
    return g;
  }
};

/// SplitMix64; small, portable and splittable by seeding with (seed, index).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
  }

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 s(seed);
    const std::uint64_t a = s();
    SplitMix64 t(a ^ (index * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
    return SplitMix64(t());
  }

 private:
  std::uint64_t state_;
};

inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

inline constexpr int kMaxTransformAttempts = 100;

/// Draws from `draw(lo, hi)` until the matrix is invertible.
template <class Draw>
Transform random_transform_with(std::size_t n, std::int64_t bound, std::uint64_t seed, std::uint64_t index,
                                Draw&& draw) {
  if (bound < 1) throw std::invalid_argument("random_transform: bound must be at least 1");
  for (int attempt = 0; attempt < kMaxTransformAttempts; ++attempt) {
    Transform g;
    g.seed = seed;
    g.index = index;
    g.bound = bound;
    g.matrix.assign(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) g.matrix[j][i] = Rational(static_cast<long>(draw(-bound, bound)));
    }
    if (determinant(g.matrix) != 0) return g;
  }
  throw std::runtime_error("random_transform: no invertible matrix after " +
                           std::to_string(kMaxTransformAttempts) + " draws");
}

inline Transform random_transform(std::size_t n, const GenericityPolicy& policy, std::uint64_t index) {
  policy.validate();
  SplitMix64 rng = SplitMix64::stream(policy.seed, index);
  return random_transform_with(n, policy.bound, policy.seed, index,
                               [&](std::int64_t lo, std::int64_t hi) { return rng.uniform(lo, hi); });
}

inline Polynomial apply_transform(const Polynomial& f, const Transform& g) {
  const std::size_t n = f.nvars();
  require_same_size(n, g.size(), "apply_transform");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.matrix[j][i] != 0) ts.push_back(Term{g.matrix[j][i], ExponentVector::unit(n, j)});
    }
    images.emplace_back(n, std::move(ts));
  }
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(Polynomial::constant(n, 1));
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[i]);
    return p[static_cast<std::size_t>(e)];
  };
  Polynomial out(n);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(n, t.coefficient);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] != 0) prod = prod * power(i, t.monomial[i]);
    }
    out = out + prod;
  }
  return out;
}

inline Ideal apply_transform(const Ideal& I, const Transform& g) {
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(apply_transform(f, g));
  if (I.is_homogeneous()) return Ideal(I.nvars(), std::move(gens), I.degree_cap());
  return Ideal::affine(I.nvars(), std::move(gens), I.degree_cap());
}

/// The transformed copies g_1(I), ..., g_k(I) used for one genericity claim,
/// with escalation levels. Transformed ideals keep their Groebner caches.
class GenericFamily {
 public:
  GenericFamily(Ideal base, GenericityPolicy policy) : base_(std::move(base)), policy_(policy) {
    policy_.validate();
  }

  const Ideal& base() const noexcept { return base_; }
  const GenericityPolicy& policy() const noexcept { return policy_; }
  std::size_t nvars() const noexcept { return base_.nvars(); }

  int levels() const { return policy_.identity ? 1 : policy_.escalations + 1; }
  int samples() const { return policy_.identity ? 1 : policy_.samples; }

  /// Transform number `i` of escalation `level`.
  const Transform& transform(int level, int i) const {
    std::lock_guard lock(mu_);
    return entry(level, i).transform;
  }

  const Ideal& ideal(int level, int i) const {
    std::lock_guard lock(mu_);
    return entry(level, i).ideal;
  }

  /// Evaluates `f` on every sample of a level and returns the common value,
  /// escalating the bound on disagreement.
  template <class F>
  auto agree(F&& f, const std::string& what) const -> decltype(f(std::declval<const Ideal&>(), 0)) {
    for (int level = 0; level < levels(); ++level) {
      auto first = f(ideal(level, 0), level);
      bool same = true;
      for (int i = 1; i < samples() && same; ++i) {
        same = (f(ideal(level, i), level) == first);
      }
      if (same) return first;
    }
    throw GenericityFailure(what + ": independent coordinate changes disagree after " +
                            std::to_string(levels()) + " escalation levels");
  }

 private:
  struct Entry {
    Transform transform;
    Ideal ideal;
  };

  Entry& entry(int level, int i) const {
    const auto key = std::pair(level, i);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
    Transform g;
    if (policy_.identity) {
      g = Transform::identity(nvars());
    } else {
      GenericityPolicy p = policy_;
      for (int l = 0; l < level; ++l) p.bound *= 100;
      g = random_transform(nvars(), p, static_cast<std::uint64_t>(level) * 1000 + static_cast<std::uint64_t>(i));
    }
    Ideal gi = policy_.identity ? base_ : apply_transform(base_, g);
    return entries_.emplace(key, Entry{std::move(g), std::move(gi)}).first->second;
  }

  Ideal base_;
  GenericityPolicy policy_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, Entry> entries_;
};

/// Generic initial ideal: the leading ideal of g(I), agreed across samples.
/// Plain orders additionally require each sample to be strongly stable for
/// the order's variable ordering; an unstable sample counts as disagreement.
inline MonomialIdeal gin(const GenericFamily& family, const OrderSpec& order) {
  const std::size_t n = family.nvars();
  const bool check = order.is_plain() && !family.policy().identity;
  auto sample = [&](const Ideal& gi) -> std::optional<MonomialIdeal> {
    MonomialIdeal m(n, leading_monomials(gi, order));
    if (check && !is_strongly_stable(m, order.permutation)) return std::nullopt;
    return m;
  };
  for (int level = 0; level < family.levels(); ++level) {
    auto first = sample(family.ideal(level, 0));
    bool same = first.has_value();
    for (int i = 1; i < family.samples() && same; ++i) same = (sample(family.ideal(level, i)) == first);
    if (same) return *first;
  }
  throw GenericityFailure("gin: independent coordinate changes disagree after " +
                          std::to_string(family.levels()) + " escalation levels");
}

inline MonomialIdeal gin(const Ideal& I, const OrderSpec& order, const GenericityPolicy& policy) {
  return gin(GenericFamily(I, policy), order);
}

}  // namespace tropdepth
