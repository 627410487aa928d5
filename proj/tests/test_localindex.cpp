#include <gtest/gtest.h>

#include <random>

#include "apollonius/errors.hpp"
#include "apollonius/localindex.hpp"
#include "support.hpp"

using namespace apollo;
using namespace apollo::testing;

namespace {

// Affine tangency equation of (a, b, r^2) at c = (c1, c2, c3), c0 = 1:
// (a c1 + b c2 + c3 + a^2 + b^2 - r^2)^2 - r^2 (c1^2 + c2^2 - 4 c3); a point is the
// plane a c1 + b c2 + c3 + a^2 + b^2.
std::array<FieldElement, 3> oracle_gradient(const InputObject& o, const std::array<FieldElement, 4>& c) {
  if (o.is_point()) return {o.a, o.b, FieldElement(1)};
  const FieldElement e = o.a * c[1] + o.b * c[2] + c[3] + o.a * o.a + o.b * o.b - o.r2;
  const FieldElement two(2);
  return {two * e * o.a - two * o.r2 * c[1], two * e * o.b - two * o.r2 * c[2], two * e + FieldElement(4) * o.r2};
}

FieldElement oracle_vol(const Configuration& cfg, const ApolloniusSolution& s) {
  std::array<std::array<FieldElement, 3>, 3> g;
  for (std::size_t i = 0; i < 3; ++i) g[i] = oracle_gradient(cfg.objects[i], s.circle.coords());
  return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
         g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

}  // namespace

TEST(Vol, MatchesGradientDeterminantOracle) {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 10; ++n) {
    const Configuration cfg = n == 0 ? generic() : random_ccc(rng);
    for (auto& s : solve_all(cfg)) EXPECT_EQ(vol(cfg, s), oracle_vol(cfg, s)) << "label " << s.label;
  }
}

TEST(Vol, PointInputsUsePlanes) {
  std::mt19937_64 rng(32);
  for (int n = 0; n < 5; ++n) {
    const Configuration cfg = random_cpp(rng);
    for (auto& s : solve_all(cfg)) EXPECT_EQ(vol(cfg, s), oracle_vol(cfg, s));
  }
}

TEST(Area, DeterminantEqualsCofactorSum) {
  std::mt19937_64 rng(33);
  for (int n = 0; n < 20; ++n) {
    const Configuration cfg = random_ccc(rng, n % 2 == 0);
    for (auto& s : solve_all(cfg)) {
      EXPECT_EQ(area(cfg, s), area_det(cfg, s));
      EXPECT_TRUE(square_class_equal(vol(cfg, s), area(cfg, s)));
    }
  }
}

TEST(Area, NonzeroForTransverseSolutions) {
  for (auto& s : solve_all(generic())) EXPECT_FALSE(area(generic(), s).is_zero());
}

TEST(SquareClass, Basics) {
  EXPECT_TRUE(square_class_equal(q("2"), q("8")));
  EXPECT_TRUE(square_class_equal(q("3/4"), q("12")));
  EXPECT_FALSE(square_class_equal(q("2"), q("3")));
  EXPECT_FALSE(square_class_equal(q("1"), q("-1")));
}

TEST(Beta, RationalPointIsRankOne) {
  const auto sols = solve_all(generic());
  const FormClass b = beta(sols[0], q("5"));
  EXPECT_EQ(b.rank, 1);
  EXPECT_EQ(b, invariants({Scalar(5)}, 0));
}

TEST(Beta, ConjugatePairIsTraceForm) {
  // Solutions in sign class with a non-square discriminant live in a quadratic field.
  const Configuration cfg = deficient_real();
  for (auto& s : solve_all(cfg)) {
    if (!s.adjoined || !closed_point_representative(s)) continue;
    const FormClass b = beta(s, vol(cfg, s));
    EXPECT_EQ(b.rank, 2);
    return;
  }
  FAIL() << "no conjugate solution";
}

TEST(ClosedPoints, GenericSumsToFourH) {
  const Configuration cfg = generic();
  const auto sols = solve_all(cfg);
  EXPECT_EQ(sum_over_closed_points(cfg, sols, IndexFormula::Vol), hyperbolic(4, 0));
  EXPECT_EQ(sum_over_closed_points(cfg, sols, IndexFormula::Area), hyperbolic(4, 0));
}

TEST(ClosedPoints, DeficientRealSumsToFourH) {
  const Configuration cfg = deficient_real();
  const auto sols = solve_all(cfg);
  EXPECT_EQ(sum_over_closed_points(cfg, sols), hyperbolic(4, 0));
}

TEST(ClosedPoints, UnsplitRadiiRejected) {
  const Configuration cfg = ccc(FieldDescriptor::rationals(), {{{"0", "0", "2"}, {"4", "0", "1"}, {"2", "3", "1"}}});
  try {
    sum_over_closed_points(cfg, solve_all(cfg));
    FAIL() << "expected NotSplitRadii";
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSplitRadii);
  }
}

TEST(ClosedPoints, OverFiniteField) {
  const Configuration cfg = generic(FieldDescriptor::prime_field(11));
  EXPECT_EQ(sum_over_closed_points(cfg, solve_all(cfg)), hyperbolic(4, 11));
}

TEST(IndexReports, OneBetaPerClosedPoint) {
  const Configuration cfg = deficient_real();
  const auto sols = solve_all(cfg);
  const auto reports = index_reports(cfg, sols, true);
  ASSERT_EQ(reports.size(), sols.size());
  int ranks = 0;
  for (auto& r : reports) {
    EXPECT_TRUE(r.same_square_class);
    if (r.beta) ranks += r.beta->rank;
  }
  EXPECT_EQ(ranks, 8);
}
