// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "helpers.hpp"

using namespace tropdepth;
using namespace testing_support;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

int cli_status(const std::string& args) {
  const std::string cmd = std::string(TROPDEPTH_CLI) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string data(const std::string& name) { return std::string(TROPDEPTH_DATA) + "/" + name + ".ideal"; }

bool min_attained(const WeightVector& w, std::size_t k) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) c += w[i] == w.min() ? 1 : 0;
  return c >= k;
}

/// 200 seeded weights with small entries, so ties in the minimum are common.
std::vector<WeightVector> seeded_grid(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<WeightVector> pts;
  for (int k = 0; k < 200; ++k) {
    WeightVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = rng.uniform(0, 3);
    pts.push_back(w);
  }
  return pts;
}

void criterion1(Check& c) {
  const std::tuple<int, int, int> cases[] = {{5, 3, 1}, {6, 4, 1}, {6, 4, 2}};
  for (const auto& [n, m, t] : cases) {
    const Ideal I = stable_family(static_cast<std::size_t>(n), m, t);
    const std::string tag = "stable_family(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(t) + ")";
    c.expect(dimension(I) == m, tag + " dimension");
    c.expect(depth(I) == t, tag + " depth");
  }
  c.expect(dimension(borel_example()) == 4, "borel dimension");
  c.expect(depth(borel_example()) == 1, "borel depth");
}

void criterion2(Check& c) {
  Rng rng(2024);
  int ideals = 0;
  for (int trial = 0; ideals < 4 && trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 4));
    const Ideal I = random_graded_ideal(rng, n, 3, rng.uniform(1, 3), 3);
    if (is_unit_ideal(I) || dimension(I) == 0) continue;
    const int m = dimension(I);
    ++ideals;
    GenericityPolicy pol;
    pol.seed = static_cast<std::uint64_t>(trial);
    const GenericFamily fam(I, pol);
    for (const auto& w : seeded_grid(n, static_cast<std::uint64_t>(trial))) {
      c.expect(tropical_member(fam, w) == min_attained(w, n - static_cast<std::size_t>(m) + 1),
               "membership mismatch at " + w.to_string());
    }
  }
  c.expect(ideals >= 3, "fewer than three positive-dimensional ideals");
}

void criterion3(Check& c) {
  const Ideal q = make_ideal(4, {"x1^2 + x2^2 + x3^2 + x4^2"});
  const Ideal ci = make_ideal(4, {"x1^2 + x2^2 + x3^2 + x4^2", "x1*x2 + x3*x4"});
  for (const Ideal& I : {q, ci}) {
    const GenericFamily fam(I, {});
    const int m = dimension(I);
    c.expect(classify_cm(fam, false).cls == CmClass::CM, "not CM");
    for (const auto& cone : maximal_cones(4, m)) c.expect(cone_constancy(fam, cone, 3), "not constant on " + to_string(cone));
  }
}

void criterion4(Check& c) {
  c.expect(separating_witness(borel_example()).distinct, "borel witness");
  c.expect(separating_witness(stable_family(5, 3, 1)).distinct, "stable family witness");
  c.expect(cli_status("verify --target Wnmt " + data("borel_example")) == 1, "verify Wnmt on borel did not fail");
}

void criterion5(Check& c) {
  const GenericFamily fam(stable_family(5, 3, 1), {});
  const auto cones = refinement_maximal_cones(5, 3, 1);
  c.expect(cones.size() == 20, "cone count");
  for (const auto& cone : cones) c.expect(cone_constancy(fam, cone, 3), "not constant on " + to_string(cone));
  const long gap = interior_gap(fam);
  int differ = 0;
  for (const auto& [a, b] : adjacent_pairs(5, 3, 1)) {
    const bool d = initial_ideals_differ(fam, interior_point(a, gap), interior_point(b, gap));
    c.expect(d, "adjacent pair " + to_string(a) + " / " + to_string(b) + " agrees");
    differ += d;
  }
  c.expect(differ >= 3, "fewer than three differing pairs");
}

void criterion6(Check& c) {
  c.expect(recover_depth(borel_example()).depth == 1, "borel");
  c.expect(recover_depth(stable_family(5, 3, 1)).depth == 1, "stable_family(5,3,1)");
  c.expect(recover_depth(stable_family(6, 4, 2)).depth == 2, "stable_family(6,4,2)");
}

void criterion7(Check& c) {
  const Ideal quadric = make_ideal(4, {"x1^2 + x2^2 + x3^2 + x4^2"});
  const Ideal cubic = make_ideal(3, {"x1^3 + x2^3 + x3^3 + x1*x2*x3"});
  const auto run = [&](const Ideal& I, const std::vector<ConeId>& cones, long expected) {
    const GenericFamily fam(I, {});
    c.expect(multiplicity(I) == expected, "m(I)");
    for (const auto& cone : cones) {
      const MultiplicityReport r = intrinsic_multiplicity(fam, cone);
      c.expect(r.matches && r.m_saturated == expected, "mismatch on " + to_string(cone));
    }
  };
  run(quadric, maximal_cones(4, 3), 2);
  run(cubic, maximal_cones(3, 2), 3);
  run(stable_family(5, 3, 1), refinement_maximal_cones(5, 3, 1), 1);
}

void criterion8(Check& c) {
  GenericityPolicy pol;
  pol.identity = true;
  for (std::size_t k = 1; k <= 4; ++k) {
    const GenericFamily fam(depth_family(4, k), pol);
    for (const auto& w : seeded_grid(4, 80 + k)) {
      c.expect(tropical_member(fam, w) == (w[0] == w[1]), "k=" + std::to_string(k) + " at " + w.to_string());
    }
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    std::vector<std::pair<Polynomial, int>> factors;
    for (std::size_t i = 0; i < k; ++i) factors.emplace_back(Polynomial::variable(k, i), 1);
    factors.emplace_back(Polynomial::variable(k, 0) + Polynomial::variable(k, 1), 1);
    c.expect(hypersurface_mc(f_k(k), factors, WeightVector(k)) == 1, "hypersurface_mc f_" + std::to_string(k));
    c.expect(multiplicity(Ideal(k, {f_k(k)})) == static_cast<long>(k) + 1, "m(f_" + std::to_string(k) + ")");
  }
}

void criterion9(Check& c) {
  c.expect(refinement_maximal_cones(5, 4, 1).size() == 30, "W_5^{4,1}");
  c.expect(maximal_cones(5, 4).size() == 10, "W_5^4");
  for (int n = 3; n <= 6; ++n) {
    for (int m = 3; m < n; ++m) {
      for (int t = 1; t < m - 1; ++t) {
        long brute = 0, total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (long code = 0; code < total; ++code) {
          int sizes[3] = {0, 0, 0};
          long x = code;
          for (int i = 0; i < n; ++i, x /= 3) ++sizes[x % 3];
          brute += sizes[0] == n - m + 1 && sizes[2] == t;
        }
        c.expect(static_cast<long>(refinement_maximal_cones(static_cast<std::size_t>(n), m, t).size()) == brute,
                 "count n=" + std::to_string(n));
      }
    }
  }
}

void criterion10(Check& c) {
  Rng rng(10);
  for (std::size_t n = 3; n <= 4; ++n) {
    for (int t = 2; t <= 3; ++t) {
      Polynomial f(n);
      for (const auto& u : monomials_of_degree(n, t)) f = f + Polynomial::monomial(u, Rational(rng.uniform(1, 9)));
      GenericityPolicy pol;
      pol.seed = 100 + n * 10 + static_cast<std::uint64_t>(t);
      const GenericFamily fam(Ideal(n, {f}), pol);
      const Polynomial g = fam.ideal(0, 0).generators().front();
      std::vector<ExponentVector> simplex;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> v(n, 0);
        v[i] = t;
        simplex.emplace_back(v);
      }
      std::sort(simplex.begin(), simplex.end());
      const NewtonPolytope P = newton_polytope(g);
      c.expect(P.vertices == simplex, "vertices n=" + std::to_string(n) + " t=" + std::to_string(t));
      for (std::size_t i = 0; i < P.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < P.vertices.size(); ++j) {
          c.expect(edge_lattice_length(P.vertices[i], P.vertices[j]) == t, "edge length");
        }
      }
      for (const auto& cone : maximal_cones(n, static_cast<int>(n) - 1)) {
        c.expect(intrinsic_multiplicity(fam, cone).m_saturated == t, "intrinsic multiplicity on " + to_string(cone));
      }
    }
  }
}

void criterion11(Check& c) {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Ideal I = random_graded_ideal(rng, 3, 3, 3);
    auto gens = I.generators();
    const OrderSpec o = OrderSpec::grevlex(3);
    const auto G = buchberger(I, o)->elements;
    std::shuffle(gens.begin(), gens.end(), rng.engine());
    c.expect(buchberger(Ideal(3, gens), o)->elements == G, "shuffle uniqueness");
  }
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const Ideal I = random_graded_ideal(rng, n, 3, rng.uniform(1, 3));
    const auto gb = buchberger(I, OrderSpec::grevlex(n));
    for (int d = 0; d <= 6; ++d) {
      for (const auto& u : monomials_of_degree(n, d)) {
        const Polynomial f = Polynomial::monomial(u);
        c.expect(normal_form(f, gb->elements, gb->order).is_zero() == brute_force_member(I.generators(), f),
                 "membership oracle");
      }
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<ExponentVector> g;
    for (int k = rng.uniform(1, 4); k > 0; --k) {
      ExponentVector e = random_exponent(rng, n, 3);
      if (e.is_one()) e = ExponentVector::unit(n, 0);
      g.push_back(e);
    }
    const MonomialIdeal M(n, g);
    const auto hf = hilbert_function(hilbert(M), 8);
    for (int d = 0; d <= 8; ++d) c.expect(hf[static_cast<std::size_t>(d)] == standard_monomials(M, d), "Hilbert function");
  }
  int exercised = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Ideal I = random_graded_ideal(rng, 3, 2, 2);
    WeightVector w(3), w2(3);
    for (std::size_t i = 0; i < 3; ++i) {
      w[i] = rng.uniform(0, 3);
      w2[i] = rng.uniform(0, 3);
    }
    const Rational lambda = Q(rng.uniform(1, 5), rng.uniform(1, 5));
    const Rational shift = Q(rng.uniform(-7, 7), rng.uniform(1, 2));
    c.expect(ideal_equal(initial_ideal(I, w), initial_ideal(I, w.affine(lambda, shift))), "scaling invariance");
    const auto G = buchberger(I, OrderSpec::grevlex(3).refined(w))->elements;
    const bool same = std::all_of(G.begin(), G.end(), [&](const Polynomial& p) {
      return initial_form(w, p) == initial_form(w2, p);
    });
    if (same) {
      ++exercised;
      c.expect(ideal_equal(initial_ideal(I, w), initial_ideal(I, w2)), "equal initial forms, unequal initial ideals");
    }
  }
  c.expect(exercised > 0, "implication never exercised");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"depth and dimension regression", criterion1},
      {"tropical set is the m-skeleton", criterion2},
      {"CM and almost-CM fan equality", criterion3},
      {"non-CM separation", criterion4},
      {"refinement fan for stable_family(5,3,1)", criterion5},
      {"depth recovery", criterion6},
      {"multiplicity per cone", criterion7},
      {"non-generic counterexamples", criterion8},
      {"combinatorial counts", criterion9},
      {"Newton polytope of a generic form", criterion10},
      {"engine property suites", criterion11},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
    if (!c.ok) std::cout << " (" << c.why.str() << ")";
    std::cout << " [" << std::fixed << std::setprecision(2) << secs << "s]\n";
    failed += c.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
