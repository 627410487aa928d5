#include <gtest/gtest.h>

#include "apollonius/duality.hpp"
#include "apollonius/errors.hpp"
#include "support.hpp"

using namespace apollo;
using namespace apollo::testing;

namespace {

const std::array<ThetaMatrix, 3> kReference{
    ThetaMatrix::from_pairs({{1, 8}, {2, 7}, {3, 6}, {4, 5}}),
    ThetaMatrix::from_pairs({{1, 5}, {2, 6}, {3, 7}, {4, 8}}),
    ThetaMatrix::from_pairs({{1, 3}, {2, 4}, {5, 7}, {6, 8}}),
};

}  // namespace

TEST(ThetaMatrix, ReferenceValues) {
  EXPECT_EQ(reference_thetas(), kReference);
  EXPECT_EQ(reference_inversive(), ThetaMatrix::from_pairs({{1, 2}, {3, 4}, {5, 6}, {7, 8}}));
  EXPECT_EQ(kReference[0] * kReference[1] * kReference[2], reference_inversive());
  EXPECT_EQ(inversive_matrix(), reference_inversive());
}

TEST(ThetaMatrix, Algebra) {
  const ThetaMatrix id = ThetaMatrix::identity();
  EXPECT_TRUE(id.is_permutation());
  EXPECT_TRUE(id.involution());
  EXPECT_FALSE(id.fixed_point_free());
  for (auto& t : kReference) {
    EXPECT_TRUE(t.symmetric());
    EXPECT_TRUE(t.involution());
    EXPECT_TRUE(t.fixed_point_free());
    EXPECT_EQ(t * t, id);
    EXPECT_EQ(t * id, t);
  }
  EXPECT_EQ(kReference[0].image(1), 8);
  EXPECT_EQ(kReference[2].image(6), 8);
  EXPECT_EQ(kReference[1].str().substr(0, 15), "[0 0 0 0 1 0 0 ");
}

TEST(Cube, ReferenceMatricesFormTheCube) {
  const CubeReport r = cube_check(kReference);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.trivalent);
  EXPECT_TRUE(r.bipartite);
  EXPECT_TRUE(r.product_is_inversive);
}

TEST(Cube, SabotageIsDetected) {
  std::array<ThetaMatrix, 3> t = kReference;
  t[1] = ThetaMatrix::identity();
  const CubeReport r = cube_check(t);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.no_fixed_points);
  // Two equal involutions give a disconnected graph.
  t[1] = kReference[0];
  EXPECT_FALSE(cube_check(t).ok());
}

TEST(Theta, GenericMatchesReference) {
  const Configuration cfg = generic();
  const Radii radii = choose_radii(cfg);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(theta(cfg, radii, i), kReference[static_cast<std::size_t>(i - 1)]) << "i = " << i;
    EXPECT_EQ(theta(cfg, radii, i, CenterTerms::Scaled), kReference[static_cast<std::size_t>(i - 1)]) << "i = " << i;
  }
}

TEST(Theta, FiniteField) {
  const Configuration cfg = generic(FieldDescriptor::prime_field(17));
  const Radii radii = choose_radii(cfg);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(theta(cfg, radii, i), kReference[static_cast<std::size_t>(i - 1)]);
}

TEST(Theta, SeededConfigurations) {
  for (const Configuration& cfg : seeded_ccc(8)) {
    const Radii radii = choose_radii(cfg);
    std::array<ThetaMatrix, 3> t;
    for (int i = 1; i <= 3; ++i) t[static_cast<std::size_t>(i - 1)] = theta(cfg, radii, i);
    EXPECT_EQ(t, kReference);
    EXPECT_TRUE(cube_check(t).ok());
  }
}

TEST(Family, OneRecoversCoaklayPolynomial) {
  const Configuration cfg = deficient_real();
  const Radii radii = choose_radii(cfg);
  for (auto& s : sign_classes()) {
    const QuadraticPoly f = coaklay_poly(coaklay_coefficients(cfg, radii.r, s), radii.r, s);
    for (int i = 1; i <= 3; ++i) {
      for (CenterTerms mode : {CenterTerms::Fixed, CenterTerms::Scaled}) {
        const QuadraticPoly g = family_poly(cfg, radii, s, i, mode).at(FieldElement(1));
        EXPECT_EQ(g.a, f.a);
        EXPECT_EQ(g.b, f.b);
        EXPECT_EQ(g.c, f.c);
      }
    }
  }
}

TEST(Family, ZeroFiberPairsSignClasses) {
  // At t = 0 flipping s_i gives the same quadratic; for i = 1 the flipped vector
  // normalizes to -s, which acts as x -> -x.
  const Configuration cfg = generic();
  const Radii radii = choose_radii(cfg);
  const auto& classes = sign_classes();
  for (int i = 1; i <= 3; ++i) {
    for (const SignVector& s : classes) {
      SignVector partner = s;
      int flip = 1;
      if (i == 1) {
        partner = {1, -s[1], -s[2]};
        flip = -1;
      } else {
        partner[static_cast<std::size_t>(i - 1)] = -partner[static_cast<std::size_t>(i - 1)];
      }
      const QuadraticPoly a = family_poly(cfg, radii, s, i).at(FieldElement(0));
      const QuadraticPoly b = family_poly(cfg, radii, partner, i).at(FieldElement(0));
      EXPECT_EQ(a.a, b.a);
      EXPECT_EQ(a.b, FieldElement(flip) * b.b);
      EXPECT_EQ(a.c, b.c);
    }
  }
}

TEST(Ramification, ZeroFiberIsDouble) {
  const Configuration cfg = generic();
  const Radii radii = choose_radii(cfg);
  for (int i = 1; i <= 3; ++i) {
    const RamificationReport r = ramification_scan(cfg, radii, i, {FieldElement(0), FieldElement(1), q("1/2")});
    EXPECT_TRUE(r.fiber_zero_all_double) << "i = " << i;
    EXPECT_EQ(r.entries.size(), 4u);
    for (auto& e : r.entries) {
      EXPECT_FALSE(e.vanishes_at_zero);
      ASSERT_EQ(e.evaluations.size(), 3u);
      EXPECT_FALSE(e.evaluations[1].second);  // the t = 1 fiber is etale
    }
  }
}

TEST(SumChecks, InversivePairsSumToHyperbolic) {
  const Configuration cfg = generic();
  const auto checks = inversive_sum_check(cfg, choose_radii(cfg));
  ASSERT_EQ(checks.size(), 4u);
  for (auto& c : checks) {
    EXPECT_EQ(c.state, CheckState::Pass) << c.reason;
    ASSERT_TRUE(c.sum.has_value());
    EXPECT_EQ(*c.sum, *c.expected);
  }
}

TEST(SumChecks, ConjugatePairCountedOnce) {
  const Configuration cfg = deficient_real();
  bool saw_conjugate = false;
  for (auto& c : inversive_sum_check(cfg, choose_radii(cfg))) {
    EXPECT_NE(c.state, CheckState::Fail);
    if (c.state == CheckState::Pass && c.sum->rank == 2 && c.reason.find("conjugate") != std::string::npos) {
      saw_conjugate = true;
    }
  }
  EXPECT_TRUE(saw_conjugate);
}

TEST(SumChecks, DegenerateDualsSumToTwoH) {
  const Configuration cfg = generic();
  const Radii radii = choose_radii(cfg);
  for (int i = 1; i <= 3; ++i) {
    const auto checks = degen_dual_sum_check(cfg, radii, i, theta(cfg, radii, i));
    EXPECT_EQ(checks.size(), 2u);
    for (auto& c : checks) {
      EXPECT_EQ(c.indices.size(), 4u);
      EXPECT_NE(c.state, CheckState::Fail) << c.reason;
      if (c.state == CheckState::Pass) EXPECT_EQ(*c.sum, hyperbolic(2, 0));
    }
  }
}

TEST(SumChecks, UnsplitRadiiAreGated) {
  const Configuration cfg = ccc(FieldDescriptor::rationals(), {{{"0", "0", "2"}, {"4", "0", "1"}, {"2", "3", "1"}}});
  for (auto& c : inversive_sum_check(cfg, choose_radii(cfg))) EXPECT_EQ(c.state, CheckState::HypothesisNotMet);
}

TEST(Theta, DegenerateMergeIsReported) {
  // A t = 0 quadratic loses its leading coefficient for this configuration.
  const Configuration cfg = ccc(FieldDescriptor::rationals(), {{{"2", "-17", "36"}, {"-3", "-11", "49"}, {"12", "-9", "4"}}});
  ASSERT_TRUE(cfg.check().ok());
  const Radii radii = choose_radii(cfg);
  bool merged = false;
  for (int i = 1; i <= 3; ++i) {
    try {
      theta(cfg, radii, i);
    } catch (const MathError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DegenerateMerge);
      merged = true;
    }
  }
  EXPECT_TRUE(merged);
  EXPECT_EQ(solve_all(cfg, radii).size(), 8u);
}
