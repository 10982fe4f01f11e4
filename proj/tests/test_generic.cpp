#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace tropdepth;
using namespace testing_support;

namespace {

/// Whether the minimum of w is attained at least k times.
bool min_attained(const WeightVector& w, std::size_t k) {
  const Rational lo = w.min();
  std::size_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) c += w[i] == lo ? 1 : 0;
  return c >= k;
}

WeightVector grid_point(std::size_t n, long code, long side) {
  WeightVector w(n);
  for (std::size_t i = 0; i < n; ++i, code /= side) w[i] = code % side;
  return w;
}

}  // namespace

TEST(TropicalMember, Examples) {
  const Ideal I = stable_family(5, 3, 1);
  EXPECT_TRUE(tropical_member(I, WeightVector(5)));
  EXPECT_FALSE(tropical_member(I, WeightVector{0, 1, 2, 3, 4}));
  EXPECT_TRUE(tropical_member(I, WeightVector{0, 0, 0, 1, 2}));
  EXPECT_FALSE(tropical_member(I, WeightVector{0, 0, 1, 1, 2}));
  EXPECT_THROW(tropical_member(make_ideal(2, {"x1", "x2"}), WeightVector(2)), std::invalid_argument);
  EXPECT_THROW(tropical_member(I, WeightVector(4)), DimensionMismatch);
}

TEST(TropicalMember, SetIsSkeletonProperty) {
  Rng rng(91);
  int ideals = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 4));
    const Ideal I = random_graded_ideal(rng, n, 3, rng.uniform(1, 2), 3);
    if (is_unit_ideal(I)) continue;
    const int m = dimension(I);
    if (m == 0) continue;
    ++ideals;
    GenericityPolicy pol;
    pol.seed = static_cast<std::uint64_t>(trial);
    const GenericFamily fam(I, pol);
    for (long code = 0; code < 27 * (n == 4 ? 3 : 1); ++code) {
      const WeightVector w = grid_point(n, code, 3);
      EXPECT_EQ(tropical_member(fam, w), min_attained(w, n - static_cast<std::size_t>(m) + 1)) << w.to_string();
    }
  }
  EXPECT_GE(ideals, 3);
}

TEST(ConeConstancy, Examples) {
  const Ideal q = make_ideal(4, {"x1^2 + x2^2 + x3^2 + x4^2"});
  for (const auto& c : maximal_cones(4, 3)) EXPECT_TRUE(cone_constancy(q, c));
  const Ideal I = stable_family(5, 3, 1);
  for (const auto& c : refinement_maximal_cones(5, 3, 1)) EXPECT_TRUE(cone_constancy(I, c)) << to_string(c);
  EXPECT_THROW(cone_constancy(q, maximal_cones(4, 3).front(), 1), std::invalid_argument);
  EXPECT_THROW(cone_constancy(q, maximal_cones(5, 3).front()), DimensionMismatch);
}

TEST(ConeConstancy, NonCmIdealFailsOnCoarseCone) {
  const GenericFamily fam(borel_example(), {});
  int failures = 0;
  for (const auto& c : maximal_cones(5, 4)) {
    const auto w = constancy_witness(fam, c, 3);
    if (!w) continue;
    ++failures;
    EXPECT_EQ(locate(w->first, 4), c);
    EXPECT_EQ(locate(w->second, 4), c);
    const Ideal& gi = fam.ideal(0, 0);
    EXPECT_FALSE(ideal_equal(initial_ideal(gi, w->first), initial_ideal(gi, w->second)));
  }
  EXPECT_GT(failures, 0);
}

TEST(SeparatingWitness, Examples) {
  for (const Ideal& I : {borel_example(), stable_family(5, 3, 1)}) {
    const SeparatingWitness w = separating_witness(I);
    EXPECT_TRUE(w.distinct);
    const int m = w.dimension;
    const std::size_t n = I.nvars();
    const auto a = locate(w.omega, m);
    const auto b = locate(w.v, m);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(*a, *b);
    EXPECT_EQ(static_cast<int>(a->min_set.size()), static_cast<int>(n) - m + 1);
  }
  EXPECT_THROW(separating_witness(make_ideal(3, {"x1^2 + x2*x3"})), std::invalid_argument);
}

TEST(SeparatingWitness, ConstantForCm) {
  const SeparatingWitness w = separating_witness(make_ideal(4, {"x1^2 + x2^2 + x3^2 + x4^2"}));
  EXPECT_EQ(w.depth, 3);
  EXPECT_FALSE(w.distinct);
}

TEST(ClassifyCm, Examples) {
  const CmEvidence q = classify_cm(make_ideal(4, {"x1^2 + x2^2 + x3^2 + x4^2"}));
  EXPECT_EQ(q.cls, CmClass::CM);
  EXPECT_EQ(q.cones_constant, q.cones_checked);
  EXPECT_TRUE(q.consistent);
  const CmEvidence g = classify_cm(borel_example());
  EXPECT_EQ(g.cls, CmClass::Neither);
  EXPECT_EQ(g.depth, 1);
  EXPECT_TRUE(g.consistent);
  EXPECT_EQ(classify_cm(stable_family(5, 3, 1)).cls, CmClass::Neither);
  EXPECT_EQ(classify_cm(depth_family(4, 1)).cls, CmClass::CM);
  EXPECT_EQ(classify_cm(depth_family(4, 2)).cls, CmClass::AlmostCM);
  EXPECT_EQ(classify_cm(depth_family(4, 4)).cls, CmClass::DepthZero);
  EXPECT_STREQ(to_string(CmClass::AlmostCM), "almostCM");
  EXPECT_STREQ(to_string(CmClass::DepthZero), "depthZero");
}

TEST(ClassifyCm, ClassMatchesDepthAndDimensionProperty) {
  for (int d = 0; d <= 5; ++d) {
    for (int t = 0; t <= d; ++t) {
      const CmClass c = cm_class_of(t, d);
      if (t == d) {
        EXPECT_EQ(c, CmClass::CM);
      } else if (t == d - 1) {
        EXPECT_EQ(c, CmClass::AlmostCM);
      } else if (t == 0) {
        EXPECT_EQ(c, CmClass::DepthZero);
      } else {
        EXPECT_EQ(c, CmClass::Neither);
      }
    }
  }
}

TEST(RayConstancy, Examples) {
  const GenericFamily fam(stable_family(5, 3, 1), {});
  const DepthRecovery r = recover_depth(fam);
  EXPECT_TRUE(ray_constancy(fam, r.omega, {4}, r.c));
  EXPECT_FALSE(ray_constancy(fam, r.omega, {4, 3}, r.c));
  EXPECT_THROW(ray_constancy(fam, WeightVector(4), {0}, r.c), DimensionMismatch);
}

TEST(RecoverDepth, Examples) {
  EXPECT_EQ(recover_depth(borel_example()).depth, 1);
  EXPECT_EQ(recover_depth(stable_family(5, 3, 1)).depth, 1);
  EXPECT_EQ(recover_depth(stable_family(6, 4, 2)).depth, 2);
  EXPECT_EQ(recover_depth(stable_family(6, 4, 1)).depth, 1);
}

TEST(RecoverDepth, MatchesAlgebraicDepthProperty) {
  for (std::size_t k = 3; k <= 4; ++k) {
    const Ideal I = depth_family(5, k);
    EXPECT_EQ(recover_depth(I).depth, depth(I)) << k;
  }
  // Outside 0 < depth < dimension - 1 the ray test has nothing to separate.
  EXPECT_THROW(recover_depth(depth_family(4, 1)), std::invalid_argument);
  EXPECT_THROW(recover_depth(depth_family(4, 2)), std::invalid_argument);
}

TEST(Determinism, SameSeedSameAnswers) {
  GenericityPolicy pol;
  pol.seed = 1234;
  const Ideal I = stable_family(5, 3, 1);
  const SeparatingWitness a = separating_witness(I, pol);
  const SeparatingWitness b = separating_witness(I, pol);
  EXPECT_EQ(a.omega, b.omega);
  EXPECT_EQ(a.v, b.v);
  EXPECT_EQ(a.distinct, b.distinct);
  EXPECT_EQ(recover_depth(I, pol).omega, recover_depth(I, pol).omega);
}

TEST(IdentityHook, NonGenericFamilyHasOneCone) {
  GenericityPolicy pol;
  pol.identity = true;
  for (std::size_t k = 1; k <= 4; ++k) {
    const GenericFamily fam(depth_family(4, k), pol);
    for (long code = 0; code < 81; ++code) {
      const WeightVector w = grid_point(4, code, 3);
      EXPECT_EQ(tropical_member(fam, w), w[0] == w[1]) << k << " " << w.to_string();
    }
  }
}
