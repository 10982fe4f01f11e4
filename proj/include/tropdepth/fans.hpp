// Cones of the fan W_n, its skeletons W_n^m and the t-refinements W_n^{m,t},
// described combinatorially by which coordinates are minimal, middle or top.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropdepth/poly.hpp"
#include "tropdepth/transform.hpp"

namespace tropdepth {

/// A relatively open cone. Indices are 0-based.
///
/// With empty `middle` and `top` this is C_A = {w : w_i = min w for i in A,
/// w_j > min w otherwise}. Otherwise A, middle and top partition {0..n-1} and
/// the cone is {w_A = min < w_middle < w_top}, each middle coordinate below
/// each top coordinate.
struct ConeId {
  std::size_t n = 0;
  std::vector<int> min_set;
  std::vector<int> middle;
  std::vector<int> top;

  bool is_plain() const noexcept { return middle.empty() && top.empty(); }

  void validate() const {
    if (min_set.empty()) throw std::invalid_argument("ConeId: empty minimal set");
    std::vector<int> seen(n, 0);
    for (const auto* block : {&min_set, &middle, &top}) {
      if (!std::is_sorted(block->begin(), block->end())) throw std::invalid_argument("ConeId: unsorted block");
      for (int i : *block) {
        if (i < 0 || static_cast<std::size_t>(i) >= n) throw std::invalid_argument("ConeId: index out of range");
        if (seen[static_cast<std::size_t>(i)]++) throw std::invalid_argument("ConeId: blocks overlap");
      }
    }
    if (!is_plain() && min_set.size() + middle.size() + top.size() != n) {
      throw std::invalid_argument("ConeId: refinement blocks must cover every coordinate");
    }
  }

  friend bool operator==(const ConeId&, const ConeId&) = default;
  friend auto operator<=>(const ConeId&, const ConeId&) = default;
};

inline nlohmann::json to_json(const ConeId& c) {
  auto one_based = [](const std::vector<int>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (int i : v) a.push_back(i + 1);
    return a;
  };
  return nlohmann::json{{"min", one_based(c.min_set)}, {"middle", one_based(c.middle)}, {"top", one_based(c.top)}};
}

inline std::string to_string(const ConeId& c) { return to_json(c).dump(); }

/// Dimension of the cone; for refinement cones this is m = n - |A| + 1 as well.
inline int cone_dim(const ConeId& c) {
  c.validate();
  return static_cast<int>(c.n - c.min_set.size()) + 1;
}

namespace detail {

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(const std::vector<int>& from, std::size_t k) {
  std::vector<std::vector<int>> out;
  if (k > from.size()) return out;
  std::vector<int> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
  for (;;) {
    std::vector<int> s;
    for (int i : idx) s.push_back(from[static_cast<std::size_t>(i)]);
    out.push_back(std::move(s));
    int p = static_cast<int>(k) - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == static_cast<int>(from.size() - k) + p) --p;
    if (p < 0) return out;
    ++idx[static_cast<std::size_t>(p)];
    for (std::size_t q = static_cast<std::size_t>(p) + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

inline std::vector<int> iota(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

inline std::vector<int> complement(std::size_t n, const std::vector<int>& a) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(a.begin(), a.end(), static_cast<int>(i))) out.push_back(static_cast<int>(i));
  }
  return out;
}

inline void check_skeleton(std::size_t n, int m) {
  if (m <= 0 || static_cast<std::size_t>(m) > n) {
    throw std::invalid_argument("W_n^m: need 0 < m <= n (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
}

inline void check_refinement(std::size_t n, int m, int t) {
  check_skeleton(n, m);
  if (!(0 < t && t < m - 1 && static_cast<std::size_t>(m - 1) < n - 1)) {
    throw std::invalid_argument("W_n^{m,t}: need 0 < t < m-1 < n-1 (n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ", t=" + std::to_string(t) + ")");
  }
}

}  // namespace detail

/// Maximal cones C_A of W_n^m, |A| = n-m+1, in lexicographic order of A.
inline std::vector<ConeId> maximal_cones(std::size_t n, int m) {
  detail::check_skeleton(n, m);
  std::vector<ConeId> out;
  for (auto& a : detail::subsets(detail::iota(n), n - static_cast<std::size_t>(m) + 1)) {
    out.push_back(ConeId{n, std::move(a), {}, {}});
  }
  return out;
}

/// Maximal cones of W_n^{m,t}: A of size n-m+1, then t of the rest on top.
inline std::vector<ConeId> refinement_maximal_cones(std::size_t n, int m, int t) {
  detail::check_refinement(n, m, t);
  std::vector<ConeId> out;
  for (const auto& plain : maximal_cones(n, m)) {
    const auto rest = detail::complement(n, plain.min_set);
    for (auto& top : detail::subsets(rest, static_cast<std::size_t>(t))) {
      std::vector<int> middle;
      std::set_difference(rest.begin(), rest.end(), top.begin(), top.end(), std::back_inserter(middle));
      out.push_back(ConeId{n, plain.min_set, std::move(middle), std::move(top)});
    }
  }
  return out;
}

/// Unordered pairs of refinement cones lying in the same cone C_A.
inline std::vector<std::pair<ConeId, ConeId>> adjacent_pairs(std::size_t n, int m, int t) {
  const auto cones = refinement_maximal_cones(n, m, t);
  std::vector<std::pair<ConeId, ConeId>> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size() && cones[j].min_set == cones[i].min_set; ++j) {
      out.emplace_back(cones[i], cones[j]);
    }
  }
  return out;
}

/// Face relation in W_n: C_B is a face of C_A iff A is contained in B.
inline bool is_face(const ConeId& face, const ConeId& cone) {
  return std::includes(face.min_set.begin(), face.min_set.end(), cone.min_set.begin(), cone.min_set.end());
}

/// Point with 0 on A and a ladder v_1 = 1, v_{k+1} = gap * v_k + 1 along
/// `ladder` (the non-minimal coordinates in increasing order of weight).
inline WeightVector ladder_point(std::size_t n, const std::vector<int>& ladder, long gap) {
  if (gap < 1) throw std::invalid_argument("interior_point: gap must be at least 1");
  WeightVector w(n);
  Rational v(0);
  for (int i : ladder) {
    v = v * gap + 1;
    w[static_cast<std::size_t>(i)] = v;
  }
  return w;
}

/// Interior point whose increasing ladder runs over middle, then top, each in
/// ascending index order. Plain cones ladder over the complement of A.
inline WeightVector interior_point(const ConeId& c, long gap) {
  c.validate();
  std::vector<int> ladder;
  if (c.is_plain()) {
    ladder = detail::complement(c.n, c.min_set);
  } else {
    ladder = c.middle;
    ladder.insert(ladder.end(), c.top.begin(), c.top.end());
  }
  return ladder_point(c.n, ladder, gap);
}

/// The j-th of several distinct interior points: j = 0 is interior_point,
/// j = 1 reverses the order inside each block, later points use seeded
/// shuffles; the gap grows with j so the ladder values differ as well.
inline WeightVector sample_interior_point(const ConeId& c, long gap, int j, std::uint64_t seed = 0) {
  c.validate();
  std::vector<std::vector<int>> blocks;
  if (c.is_plain()) {
    blocks.push_back(detail::complement(c.n, c.min_set));
  } else {
    blocks.push_back(c.middle);
    blocks.push_back(c.top);
  }
  SplitMix64 rng = SplitMix64::stream(seed, 0x5EED0000ull + static_cast<std::uint64_t>(j));
  for (auto& b : blocks) {
    if (j == 1) {
      std::reverse(b.begin(), b.end());
    } else if (j >= 2) {
      for (std::size_t i = b.size(); i > 1; --i) {
        std::swap(b[i - 1], b[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
      }
    }
  }
  std::vector<int> ladder;
  for (const auto& b : blocks) ladder.insert(ladder.end(), b.begin(), b.end());
  return ladder_point(c.n, ladder, gap + j);
}

/// The relatively open cone of W_n^m (t unset) or of W_n^{m,t} containing w.
/// Returns nullopt when the minimum is attained fewer than n-m+1 times. With
/// t set, points off the open maximal refinement cones get the plain C_A.
inline std::optional<ConeId> locate(const WeightVector& w, int m, std::optional<int> t = std::nullopt) {
  const std::size_t n = w.size();
  detail::check_skeleton(n, m);
  if (t) detail::check_refinement(n, m, *t);
  const Rational lo = w.min();
  ConeId c{n, {}, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] == lo) c.min_set.push_back(static_cast<int>(i));
  }
  if (c.min_set.size() < n - static_cast<std::size_t>(m) + 1) return std::nullopt;
  if (!t || c.min_set.size() != n - static_cast<std::size_t>(m) + 1) return c;
  std::vector<int> rest = detail::complement(n, c.min_set);
  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
    return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
  });
  const std::size_t split = rest.size() - static_cast<std::size_t>(*t);
  if (w[static_cast<std::size_t>(rest[split - 1])] == w[static_cast<std::size_t>(rest[split])]) return c;
  c.middle.assign(rest.begin(), rest.begin() + static_cast<long>(split));
  c.top.assign(rest.begin() + static_cast<long>(split), rest.end());
  std::sort(c.middle.begin(), c.middle.end());
  std::sort(c.top.begin(), c.top.end());
  return c;
}

}  // namespace tropdepth
