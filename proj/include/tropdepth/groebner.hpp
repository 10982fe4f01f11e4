// Buchberger engine: normal forms, reduced Groebner bases, initial ideals,
// elimination, saturation and the monomial-containment test.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropdepth/poly.hpp"

namespace tropdepth {

/// Raised when an S-pair exceeds the configured degree cap.
class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultDegreeCap = 40;

/// A reduced Groebner basis: monic elements sorted ascending by leading monomial.
struct GroebnerBasis {
  OrderSpec order;
  std::vector<Polynomial> elements;
  std::vector<ExponentVector> leading;

  bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
};

class Ideal {
 public:
  /// A graded ideal; every generator must be homogeneous.
  Ideal(std::size_t n, std::vector<Polynomial> generators, int degree_cap = kDefaultDegreeCap)
      : Ideal(n, std::move(generators), degree_cap, true) {}

  /// An ideal with arbitrary generators (used internally for saturation and elimination).
  static Ideal affine(std::size_t n, std::vector<Polynomial> generators,
                      int degree_cap = kDefaultDegreeCap) {
    return Ideal(n, std::move(generators), degree_cap, false);
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_homogeneous() const noexcept { return homogeneous_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  int degree_cap() const noexcept { return degree_cap_; }

  std::shared_ptr<const GroebnerBasis> cached(const std::string& key) const {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->bases.find(key);
    return it == cache_->bases.end() ? nullptr : it->second;
  }
  void store(const std::string& key, std::shared_ptr<const GroebnerBasis> gb) const {
    std::lock_guard lock(cache_->mu);
    cache_->bases[key] = std::move(gb);
  }

 private:
  Ideal(std::size_t n, std::vector<Polynomial> generators, int degree_cap, bool require_graded)
      : n_(n), degree_cap_(degree_cap), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      require_same_size(n, g.nvars(), "ideal generator");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    if (require_graded && gens_.empty()) throw std::invalid_argument("ideal: the zero ideal is not allowed");
    homogeneous_ = std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
    if (require_graded && !homogeneous_) throw NotHomogeneous("ideal: generators must be homogeneous");
  }

  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
  };

  std::size_t n_;
  std::vector<Polynomial> gens_;
  bool homogeneous_ = true;
  int degree_cap_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {

using TermList = std::vector<Term>;  // descending in the working order

inline TermList sorted_terms(const Polynomial& f, const MonomialOrder& ord) {
  TermList t = f.terms();
  std::stable_sort(t.begin(), t.end(),
                   [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  return t;
}

/// p[from..] - c * x^shift * g[1..]
inline TermList sub_scaled(TermList& p, std::size_t from, const Rational& c, const ExponentVector& shift,
                           const TermList& g, const MonomialOrder& ord) {
  TermList out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 1;
  ExponentVector gm;
  if (j < g.size()) gm = g[j].monomial + shift;
  while (i < p.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(std::move(p[i++]));
      continue;
    }
    if (i >= p.size()) {
      out.push_back(Term{-c * g[j].coefficient, gm});
      if (++j < g.size()) gm = g[j].monomial + shift;
      continue;
    }
    const auto cmp = ord(p[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(std::move(p[i++]));
    } else if (cmp < 0) {
      out.push_back(Term{-c * g[j].coefficient, gm});
      if (++j < g.size()) gm = g[j].monomial + shift;
    } else {
      Rational v = p[i].coefficient - c * g[j].coefficient;
      if (v != 0) out.push_back(Term{std::move(v), std::move(p[i].monomial)});
      ++i;
      if (++j < g.size()) gm = g[j].monomial + shift;
    }
  }
  return out;
}

/// Full reduction of f by the list G (first divisor in list order wins).
inline TermList reduce(TermList p, const std::vector<const TermList*>& G, const MonomialOrder& ord) {
  TermList result;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term& lt = p[head];
    const TermList* r = nullptr;
    for (const TermList* g : G) {
      if ((*g)[0].monomial.divides(lt.monomial)) {
        r = g;
        break;
      }
    }
    if (!r) {
      result.push_back(std::move(p[head]));
      ++head;
      continue;
    }
    const Rational c = lt.coefficient / (*r)[0].coefficient;
    const ExponentVector shift = lt.monomial - (*r)[0].monomial;
    p = sub_scaled(p, head + 1, c, shift, *r, ord);
    head = 0;
  }
  return result;
}

inline void make_monic(TermList& f) {
  const Rational lc = f.front().coefficient;
  if (lc == 1) return;
  for (auto& t : f) t.coefficient /= lc;
}

inline Polynomial to_polynomial(std::size_t n, TermList t) { return Polynomial(n, std::move(t)); }

inline std::shared_ptr<const GroebnerBasis> compute_basis(const Ideal& I, const OrderSpec& order) {
  const std::size_t n = I.nvars();
  const MonomialOrder ord(order);
  auto out = std::make_shared<GroebnerBasis>();
  out->order = order;
  if (I.is_zero()) return out;

  std::vector<TermList> inputs;
  for (const auto& g : I.generators()) inputs.push_back(sorted_terms(g, ord));
  std::stable_sort(inputs.begin(), inputs.end(), [&](const TermList& a, const TermList& b) {
    const int da = a.front().monomial.degree(), db = b.front().monomial.degree();
    if (da != db) return da < db;
    return ord(a.front().monomial, b.front().monomial) < 0;
  });

  std::vector<TermList> G;
  struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
    int degree;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto basis_view = [&]() {
    std::vector<const TermList*> v;
    v.reserve(G.size());
    for (const auto& g : G) v.push_back(&g);
    return v;
  };

  bool unit = false;
  auto insert = [&](TermList h) {
    make_monic(h);
    if (h.front().monomial.is_one()) unit = true;
    const std::size_t idx = G.size();
    for (std::size_t i = 0; i < idx; ++i) {
      ExponentVector l = lcm(G[i].front().monomial, h.front().monomial);
      const int d = l.degree();
      pairs.push_back(Pair{i, idx, std::move(l), d});
      pending.insert({i, idx});
    }
    G.push_back(std::move(h));
  };

  for (auto& f : inputs) {
    TermList h = reduce(std::move(f), basis_view(), ord);
    if (!h.empty()) insert(std::move(h));
    if (unit) break;
  }

  while (!unit && !pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      const auto c = ord(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(a.j, a.i) < std::pair(b.j, b.i))) best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    pending.erase({p.i, p.j});

    const ExponentVector& li = G[p.i].front().monomial;
    const ExponentVector& lj = G[p.j].front().monomial;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].front().monomial.divides(p.lcm)) continue;
      const auto key_ik = std::pair(std::min(p.i, k), std::max(p.i, k));
      const auto key_jk = std::pair(std::min(p.j, k), std::max(p.j, k));
      if (!pending.count(key_ik) && !pending.count(key_jk)) chain = true;
    }
    if (chain) continue;
    if (p.degree > I.degree_cap()) {
      throw DegreeCapExceeded("Groebner basis: S-pair degree " + std::to_string(p.degree) +
                              " exceeds cap " + std::to_string(I.degree_cap()));
    }

    // S-polynomial of monic elements: (l/li) gi - (l/lj) gj
    TermList s;
    {
      const ExponentVector si = p.lcm - li;
      const ExponentVector sj = p.lcm - lj;
      TermList a;
      a.reserve(G[p.i].size());
      for (std::size_t k = 1; k < G[p.i].size(); ++k) {
        a.push_back(Term{G[p.i][k].coefficient, G[p.i][k].monomial + si});
      }
      s = sub_scaled(a, 0, Rational(1), sj, G[p.j], ord);
    }
    TermList h = reduce(std::move(s), basis_view(), ord);
    if (!h.empty()) insert(std::move(h));
  }

  if (unit) {
    TermList one{Term{Rational(1), ExponentVector(n)}};
    out->leading.push_back(one.front().monomial);
    out->elements.push_back(to_polynomial(n, std::move(one)));
    return out;
  }

  // Minimalize, then interreduce.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& lj = G[j].front().monomial;
      const auto& li = G[i].front().monomial;
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<TermList> reduced;
  for (std::size_t a : keep) {
    std::vector<const TermList*> others;
    for (std::size_t b : keep) {
      if (b != a) others.push_back(&G[b]);
    }
    TermList tail(G[a].begin() + 1, G[a].end());
    TermList r = reduce(std::move(tail), others, ord);
    r.insert(r.begin(), G[a].front());
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const TermList& a, const TermList& b) {
    return ord(a.front().monomial, b.front().monomial) < 0;
  });
  for (auto& r : reduced) {
    out->leading.push_back(r.front().monomial);
    out->elements.push_back(to_polynomial(n, std::move(r)));
  }
  return out;
}

}  // namespace detail

/// The order actually used for the computation: weights are shifted so that
/// their minimum is zero (this does not change the order on any fixed degree).
inline OrderSpec effective_order(const Ideal& I, const OrderSpec& order) {
  require_same_size(I.nvars(), order.size(), "Groebner basis order");
  order.validate();
  if (!order.refinement) return order;
  if (!I.is_homogeneous()) {
    throw NotHomogeneous("Groebner basis: weight-refined orders need a graded ideal");
  }
  return order.refined(order.refinement->normalized());
}

/// Reduced Groebner basis of I with respect to `order`, memoized on I.
inline std::shared_ptr<const GroebnerBasis> buchberger(const Ideal& I, const OrderSpec& order) {
  const OrderSpec eff = effective_order(I, order);
  const std::string key = eff.key();
  if (auto hit = I.cached(key)) return hit;
  auto gb = detail::compute_basis(I, eff);
  I.store(key, gb);
  return gb;
}

/// Remainder of f on division by G (leading terms taken in `order`).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const OrderSpec& order) {
  const MonomialOrder ord(order);
  require_same_size(order.size(), f.nvars(), "normal_form");
  std::vector<detail::TermList> lists;
  lists.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
    require_same_size(f.nvars(), g.nvars(), "normal_form");
    lists.push_back(detail::sorted_terms(g, ord));
  }
  std::vector<const detail::TermList*> view;
  for (const auto& l : lists) view.push_back(&l);
  return detail::to_polynomial(f.nvars(), detail::reduce(detail::sorted_terms(f, ord), view, ord));
}

inline bool contains(const Ideal& I, const Polynomial& f, const OrderSpec& order) {
  return normal_form(f, buchberger(I, order)->elements, order).is_zero();
}

/// in_omega(I), generated by the initial forms of the reduced basis for `order` refined by omega.
inline Ideal initial_ideal(const Ideal& I, const WeightVector& omega, const OrderSpec& order) {
  require_same_size(I.nvars(), omega.size(), "initial_ideal");
  if (!I.is_homogeneous()) throw NotHomogeneous("initial_ideal: graded ideal required");
  auto gb = buchberger(I, order.unrefined().refined(omega));
  std::vector<Polynomial> forms;
  forms.reserve(gb->elements.size());
  for (const auto& g : gb->elements) forms.push_back(initial_form(omega, g));
  return Ideal(I.nvars(), std::move(forms), I.degree_cap());
}

inline Ideal initial_ideal(const Ideal& I, const WeightVector& omega) {
  return initial_ideal(I, omega, OrderSpec::grevlex(I.nvars()));
}

inline std::vector<ExponentVector> leading_monomials(const Ideal& I, const OrderSpec& order) {
  return buchberger(I, order)->leading;
}

inline Ideal leading_ideal(const Ideal& I, const OrderSpec& order) {
  std::vector<Polynomial> gens;
  for (const auto& m : leading_monomials(I, order)) gens.push_back(Polynomial::monomial(m));
  return Ideal(I.nvars(), std::move(gens), I.degree_cap());
}

inline bool ideal_equal(const Ideal& I, const Ideal& J, const OrderSpec& order) {
  require_same_size(I.nvars(), J.nvars(), "ideal_equal");
  return buchberger(I, order)->elements == buchberger(J, order)->elements;
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  return ideal_equal(I, J, OrderSpec::grevlex(I.nvars()));
}

/// I intersected with the subring free of the variables in `drop` (0-based).
inline Ideal eliminate(const Ideal& I, const std::vector<int>& drop) {
  const std::size_t n = I.nvars();
  OrderSpec order = OrderSpec::grevlex(n);
  order.elimination.assign(n, false);
  for (int v : drop) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::out_of_range("eliminate: variable index");
    order.elimination[static_cast<std::size_t>(v)] = true;
  }
  if (std::count(order.elimination.begin(), order.elimination.end(), true) == static_cast<long>(n)) {
    throw std::invalid_argument("eliminate: cannot drop every variable");
  }
  auto gb = buchberger(I, order);
  std::vector<Polynomial> kept;
  for (const auto& g : gb->elements) {
    const bool clean = std::none_of(drop.begin(), drop.end(),
                                    [&](int v) { return g.involves(static_cast<std::size_t>(v)); });
    if (clean) kept.push_back(g);
  }
  return Ideal::affine(n, std::move(kept), I.degree_cap());
}

/// (I : f^infinity) through an auxiliary variable y and elimination of y from I + (1 - y f).
inline Ideal saturate(const Ideal& I, const Polynomial& f) {
  require_same_size(I.nvars(), f.nvars(), "saturate");
  if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
  const std::size_t n = I.nvars();
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.embed(n + 1));
  gens.push_back(Polynomial::constant(n + 1, 1) - Polynomial::variable(n + 1, n) * f.embed(n + 1));
  const Ideal aux = Ideal::affine(n + 1, std::move(gens), I.degree_cap());
  const Ideal elim = eliminate(aux, {static_cast<int>(n)});
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(g.restrict_to(n));
  if (I.is_homogeneous() && f.is_homogeneous() && !out.empty()) {
    return Ideal(n, std::move(out), I.degree_cap());
  }
  return Ideal::affine(n, std::move(out), I.degree_cap());
}

inline Polynomial variable_product(std::size_t n) {
  std::vector<int> e(n, 1);
  return Polynomial::monomial(ExponentVector(std::move(e)));
}

inline bool is_unit_ideal(const Ideal& I) { return buchberger(I, OrderSpec::grevlex(I.nvars()))->is_unit(); }

/// True iff some monomial lies in I, i.e. (I : (x1...xn)^infinity) = (1).
inline bool contains_monomial(const Ideal& I) {
  if (I.is_zero()) throw std::invalid_argument("contains_monomial: zero ideal");
  const Ideal sat = saturate(I, variable_product(I.nvars()));
  return std::any_of(sat.generators().begin(), sat.generators().end(),
                     [](const Polynomial& g) { return g.is_constant(); });
}

/// (I : x_var^infinity) for graded I: divide the grevlex basis with x_var last
/// by the largest power of x_var dividing each element.
inline Ideal saturate_by_variable(const Ideal& I, int var) {
  if (!I.is_homogeneous()) throw NotHomogeneous("saturate_by_variable: graded ideal required");
  const std::size_t n = I.nvars();
  std::vector<int> perm;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) != var) perm.push_back(static_cast<int>(i));
  }
  perm.push_back(var);
  auto gb = buchberger(I, OrderSpec::grevlex(perm));
  std::vector<Polynomial> out;
  for (const auto& g : gb->elements) {
    int low = std::numeric_limits<int>::max();
    for (const auto& t : g.terms()) low = std::min(low, t.monomial[static_cast<std::size_t>(var)]);
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      ExponentVector m = t.monomial;
      m[static_cast<std::size_t>(var)] -= low;
      ts.push_back(Term{t.coefficient, m});
    }
    out.emplace_back(n, std::move(ts));
  }
  return Ideal(n, std::move(out), I.degree_cap());
}

}  // namespace tropdepth
