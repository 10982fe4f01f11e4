// JSON reports for the command-line front end.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropdepth/fans.hpp"
#include "tropdepth/generic.hpp"
#include "tropdepth/ideal_file.hpp"
#include "tropdepth/invariants.hpp"
#include "tropdepth/tropmult.hpp"

namespace tropdepth {

// nlohmann::json keeps object keys sorted, so dump() is canonical.
using Json = nlohmann::json;

inline Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

inline Json to_json(const WeightVector& w) {
  Json a = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].get_den() == 1 && w[i].get_num().fits_slong_p()) {
      a.push_back(w[i].get_num().get_si());
    } else {
      a.push_back(w[i].get_str());
    }
  }
  return a;
}

inline Json to_json(const GenericityPolicy& p) {
  return Json{{"bound", p.bound},
              {"escalations", p.escalations},
              {"identity", p.identity},
              {"samples", p.samples},
              {"seed", p.seed}};
}

inline Json to_json(const MultiplicityReport& r) {
  return Json{{"cone", to_json(r.cone)},
              {"point", to_json(r.point)},
              {"dim_initial", r.dim_initial},
              {"dim_saturated", r.dim_saturated},
              {"topdim_monomial_free", r.topdim_monomial_free},
              {"m_saturated", to_json(r.m_saturated)},
              {"m_ideal", to_json(r.m_ideal)},
              {"matches", r.matches},
              {"assumption", "top-dimensional minimal primes of the initial ideal are linear"}};
}

inline Json generator_list(const Ideal& I) {
  std::vector<std::string> s;
  for (const auto& g : buchberger(I, OrderSpec::grevlex(I.nvars()))->elements) s.push_back(to_string(g));
  std::sort(s.begin(), s.end());
  return Json(s);
}

inline Json probe(const std::string& kind, Json cone, Json result, bool exact) {
  return Json{{"kind", kind}, {"cone", std::move(cone)}, {"result", std::move(result)},
              {"evidence", exact ? "exact" : "sampled"}};
}

struct VerifyOptions {
  int points = 3;
  std::size_t cone_budget = 200;
};

/// All cones when there are at most `budget`, otherwise a seeded subset.
inline std::vector<ConeId> cone_budget(std::vector<ConeId> cones, std::size_t budget, std::uint64_t seed) {
  if (cones.size() <= budget) return cones;
  SplitMix64 rng = SplitMix64::stream(seed, 0xC0FEull);
  for (std::size_t i = cones.size(); i > 1; --i) {
    std::swap(cones[i - 1], cones[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }
  cones.resize(budget);
  std::sort(cones.begin(), cones.end());
  return cones;
}

inline Json witness_json(const ConstancyWitness& w) {
  return Json{{"first", to_json(w.first)}, {"second", to_json(w.second)}};
}

inline Json analyze_report(const IdealFile& file, const GenericityPolicy& policy, const VerifyOptions& opt = {},
                           int degree_cap = kDefaultDegreeCap) {
  const Ideal I = file.ideal(degree_cap);
  if (is_unit_ideal(I)) throw std::invalid_argument("the unit ideal has no invariants");
  GenericFamily family(I, policy);
  Json r;
  r["hash"] = content_hash(file);
  r["n"] = file.n;
  r["seed"] = policy.seed;
  r["policy"] = to_json(policy);
  const int m = dimension(I);
  const int t = depth(family);
  r["dimension"] = m;
  r["depth"] = t;
  r["multiplicity"] = to_json(multiplicity(I));
  r["gin"] = gin(family, OrderSpec::grevlex(file.n)).generator_strings();
  Json probes = Json::array();
  if (m == 0) {
    r["cm_class"] = "zeroDimensional";
  } else {
    const CmEvidence e = classify_cm(family, true, opt.points);
    r["cm_class"] = to_string(e.cls);
    if (e.witness) {
      const auto& w = *e.witness;
      probes.push_back(probe("separating_witness", to_json(ConeId{file.n, detail::iota(file.n - m + 1), {}, {}}),
                             Json{{"omega", to_json(w.omega)}, {"v", to_json(w.v)}, {"distinct", w.distinct}},
                             true));
    }
    if (e.cls == CmClass::CM || e.cls == CmClass::AlmostCM) {
      for (const auto& c : maximal_cones(file.n, m)) {
        probes.push_back(probe("cone_constancy", to_json(c), cone_constancy(family, c, opt.points), false));
      }
    }
    if (0 < t && t < m - 1) {
      const DepthRecovery d = recover_depth(family, false);
      probes.push_back(probe("recover_depth", Json(nullptr), Json{{"depth", d.depth}, {"omega", to_json(d.omega)}},
                             true));
    }
  }
  r["probes"] = probes;
  return r;
}

inline Json tropical_report(const IdealFile& file, const WeightVector& omega, const GenericityPolicy& policy,
                            int degree_cap = kDefaultDegreeCap) {
  require_same_size(file.n, omega.size(), "--omega");
  const Ideal I = file.ideal(degree_cap);
  GenericFamily family(I, policy);
  Json r;
  r["hash"] = content_hash(file);
  r["omega"] = to_json(omega);
  r["policy"] = to_json(policy);
  r["seed"] = policy.seed;
  r["member"] = tropical_member(family, omega);
  r["transform"] = policy.identity ? "identity" : "sample 0";
  r["initial_ideal"] = generator_list(initial_ideal(family.ideal(0, 0), omega));
  return r;
}

struct VerifyResult {
  Json report;
  bool pass = false;
};

inline VerifyResult verify_report(const IdealFile& file, const std::string& target, const GenericityPolicy& policy,
                                  const VerifyOptions& opt = {}, int degree_cap = kDefaultDegreeCap) {
  const Ideal I = file.ideal(degree_cap);
  GenericFamily family(I, policy);
  const std::size_t n = file.n;
  const int m = detail::require_positive_dimension(I, "verify");
  Json r;
  r["hash"] = content_hash(file);
  r["target"] = target;
  r["policy"] = to_json(policy);
  r["seed"] = policy.seed;
  r["dimension"] = m;
  Json probes = Json::array();
  bool pass = true;
  auto constancy_probe = [&](const ConeId& c) {
    const bool ok = cone_constancy(family, c, opt.points);
    Json res{{"constant", ok}};
    if (!ok) {
      if (auto w = constancy_witness(family, c, opt.points)) res["witness"] = witness_json(*w);
    }
    probes.push_back(probe("cone_constancy", to_json(c), res, false));
    pass = pass && ok;
  };
  if (target == "Wnm") {
    for (const auto& c : cone_budget(maximal_cones(n, m), opt.cone_budget, policy.seed)) constancy_probe(c);
  } else if (target == "Wnmt") {
    const int t = depth(family);
    r["depth"] = t;
    if (!(0 < t && t < m - 1)) throw std::invalid_argument("verify Wnmt: needs 0 < depth < dimension - 1");
    const auto cones = cone_budget(refinement_maximal_cones(n, m, t), opt.cone_budget, policy.seed);
    for (const auto& c : cones) constancy_probe(c);
    const long gap = interior_gap(family);
    for (const auto& [a, b] : adjacent_pairs(n, m, t)) {
      if (!std::binary_search(cones.begin(), cones.end(), a) || !std::binary_search(cones.begin(), cones.end(), b)) {
        continue;
      }
      const bool differ = initial_ideals_differ(family, interior_point(a, gap), interior_point(b, gap));
      probes.push_back(probe("adjacent_pair", Json::array({to_json(a), to_json(b)}), Json{{"differ", differ}},
                             false));
      pass = pass && differ;
    }
  } else if (target == "multiplicity") {
    const int t = depth(family);
    const auto cones = (0 < t && t < m - 1) ? refinement_maximal_cones(n, m, t) : maximal_cones(n, m);
    for (const auto& c : cone_budget(cones, opt.cone_budget, policy.seed)) {
      const MultiplicityReport mr = intrinsic_multiplicity(family, c);
      probes.push_back(probe("multiplicity", to_json(c), to_json(mr), true));
      pass = pass && mr.matches;
    }
  } else if (target == "depth-recovery") {
    const int t = depth(family);
    const DepthRecovery d = recover_depth(family);
    probes.push_back(probe("recover_depth", Json(nullptr),
                           Json{{"depth", t}, {"recovered", d.depth}, {"omega", to_json(d.omega)}}, true));
    pass = d.depth == t;
  } else {
    throw std::invalid_argument("unknown verify target: " + target);
  }
  r["probes"] = probes;
  r["pass"] = pass;
  return {r, pass};
}

}  // namespace tropdepth
