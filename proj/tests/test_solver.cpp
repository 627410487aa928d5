#include <gtest/gtest.h>

#include <random>
#include <set>

#include "apollonius/errors.hpp"
#include "apollonius/solver.hpp"
#include "support.hpp"

using namespace apollo;
using namespace apollo::testing;

namespace {

// |gamma - z_i|^2 = (rho - s_i r_i)^2, the signed-radius tangency condition.
void expect_signed_tangency(const Configuration& cfg, const Radii& radii, const ApolloniusSolution& s) {
  for (std::size_t i = 0; i < 3; ++i) {
    const InputObject& o = cfg.objects[i];
    const FieldElement dx = s.alpha - o.a, dy = s.beta - o.b;
    const FieldElement sr = FieldElement(s.sign[i]) * radii.r[i];
    EXPECT_EQ(dx * dx + dy * dy, (s.rho - sr) * (s.rho - sr)) << "label " << s.label << ", input " << i + 1;
  }
}

}  // namespace

TEST(Radii, SplitAndBranches) {
  const Radii r = choose_radii(generic());
  EXPECT_TRUE(r.split);
  EXPECT_EQ(r.r[0], q("1"));
  const Radii neg = choose_radii(generic(), {1, -1, 1});
  EXPECT_EQ(neg.r[1], q("-1"));
  const Radii irr = choose_radii(ccc(FieldDescriptor::rationals(), {{{"0", "0", "2"}, {"4", "0", "1"}, {"2", "3", "1"}}}));
  EXPECT_FALSE(irr.split);
  EXPECT_EQ(irr.r[0] * irr.r[0], q("2"));
}

TEST(Coaklay, WorkedExample) {
  const Configuration cfg = generic();
  const auto sols = solve_all(cfg);
  ASSERT_EQ(sols.size(), 8u);
  std::set<std::string> rhos;
  for (auto& s : sols) {
    if (s.sign != SignVector{1, 1, 1}) continue;
    EXPECT_EQ(s.alpha, q("2"));
    EXPECT_EQ(s.beta, q("5/6"));
    rhos.insert(s.rho.str());
  }
  EXPECT_EQ(rhos, (std::set<std::string>{"19/6", "-7/6"}));
}

TEST(Coaklay, DeltaIsTwiceSignedArea) {
  // Centers (0,0), (4,0), (2,3) span a triangle of area 6.
  EXPECT_EQ(delta(generic()), q("12"));
}

TEST(Coaklay, QuadraticVanishesAtSolutions) {
  const Configuration cfg = generic();
  const Radii radii = choose_radii(cfg);
  for (auto& s : solve_all(cfg, radii)) {
    const SignVector& sign = sign_classes()[static_cast<std::size_t>(s.sign_class)];
    const QuadraticPoly f = coaklay_poly(coaklay_coefficients(cfg, radii.r, sign), radii.r, sign);
    // f is written in x = rho.
    EXPECT_TRUE(f.evaluate(s.rho).is_zero()) << f.str();
  }
}

TEST(Solver, LabelsAndSignClasses) {
  const auto sols = solve_all(generic());
  for (std::size_t n = 0; n < sols.size(); ++n) {
    EXPECT_EQ(sols[n].label, static_cast<int>(n) + 1);
    EXPECT_EQ(sols[n].sign_class, static_cast<int>(n) / 2);
    EXPECT_EQ(sols[n].root_index, static_cast<int>(n) % 2);
    EXPECT_EQ(sols[n].sign, sign_classes()[n / 2]);
  }
}

TEST(Solver, DeficientRealHasFourRealCircles) {
  const auto sols = distinct_solutions(solve_all(deficient_real()));
  EXPECT_EQ(sols.size(), 8u);
  int real = 0;
  for (auto& s : sols) real += s.real ? 1 : 0;
  EXPECT_EQ(real, 4);
}

TEST(Solver, AllRealHasEightRealCircles) {
  int real = 0;
  for (auto& s : solve_all(all_real())) real += s.real ? 1 : 0;
  EXPECT_EQ(real, 8);
}

TEST(Solver, TangencyPointsLieOnBothCircles) {
  const Configuration cfg = generic();
  for (auto& s : solve_all(cfg)) {
    for (int i = 0; i < 3; ++i) {
      const Point2 t = tangency_point(cfg, s, i);
      const InputObject& o = cfg.objects[static_cast<std::size_t>(i)];
      const FieldElement on_input = (t.x - o.a) * (t.x - o.a) + (t.y - o.b) * (t.y - o.b) - o.r2;
      const FieldElement on_solution = (t.x - s.alpha) * (t.x - s.alpha) + (t.y - s.beta) * (t.y - s.beta) - s.rho * s.rho;
      EXPECT_TRUE(on_input.is_zero());
      EXPECT_TRUE(on_solution.is_zero());
    }
  }
}

TEST(Solver, RejectsCollinearCenters) {
  const Configuration cfg = ccc(FieldDescriptor::rationals(), {{{"0", "0", "1"}, {"4", "0", "1"}, {"9", "0", "1"}}});
  try {
    solve_all(cfg);
    FAIL() << "expected CollinearCenters";
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CollinearCenters);
  }
}

TEST(Solver, RejectsTangentInputs) {
  const Configuration cfg = ccc(FieldDescriptor::rationals(), {{{"0", "0", "1"}, {"2", "0", "1"}, {"1", "5", "1"}}});
  try {
    solve_all(cfg);
    FAIL() << "expected TangentPair";
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TangentPair);
  }
  SolveOptions lenient;
  lenient.allow_degenerate = true;
  EXPECT_NO_THROW(solve_all(cfg, lenient));
}

TEST(Solver, ThreePoints) {
  const Configuration cfg = Configuration::over(FieldDescriptor::rationals(),
                                                {InputObject::point(q("0"), q("0")), InputObject::point(q("1"), q("0")),
                                                 InputObject::point(q("0"), q("1"))});
  const auto sols = solve_all(cfg);
  ASSERT_EQ(distinct_solutions(sols).size(), 1u);
  EXPECT_EQ(sols[0].alpha, q("1/2"));
  EXPECT_EQ(sols[0].beta, q("1/2"));
  EXPECT_EQ(sols[0].rho * sols[0].rho, q("1/2"));
}

TEST(Solver, OverFiniteField) {
  const Configuration cfg = generic(FieldDescriptor::prime_field(11));
  const Radii radii = choose_radii(cfg);
  const auto sols = solve_all(cfg, radii);
  ASSERT_EQ(sols.size(), 8u);
  for (auto& s : sols) expect_signed_tangency(cfg, radii, s);
}

TEST(SolverProperty, RandomConfigurationsSatisfyTangency) {
  std::mt19937_64 rng(99);
  for (int n = 0; n < 30; ++n) {
    const Configuration cfg = random_ccc(rng, n % 3 != 0);
    const Radii radii = choose_radii(cfg);
    const auto sols = solve_all(cfg, radii);
    ASSERT_EQ(sols.size(), 8u);
    std::set<std::string> distinct;
    for (auto& s : sols) {
      expect_signed_tangency(cfg, radii, s);
      distinct.insert(s.circle.str());
      const CenterRadius cr = center_radius(s.circle);
      EXPECT_EQ(cr.r2, s.rho * s.rho);
    }
    EXPECT_EQ(distinct.size(), distinct_solutions(sols).size());
  }
}
