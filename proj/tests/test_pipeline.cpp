#include <gtest/gtest.h>

#include <algorithm>
#include <regex>
#include <set>

#include "apollonius/errors.hpp"
#include "apollonius/pipeline.hpp"
#include "support.hpp"

using namespace apollo;
using namespace apollo::testing;

namespace {

std::string config_path(const std::string& name) { return std::string(APOLLO_CONFIG_DIR) + "/" + name; }

ProblemConfig from_configuration(const Configuration& cfg) {
  ProblemConfig pc;
  pc.objects = cfg.objects;
  return pc;
}

std::int64_t mod(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

// Homogeneous tangency equations over F_p, with the first nonzero coordinate set to 1.
std::set<std::array<std::int64_t, 4>> enumerate_oracle(const std::array<std::array<std::int64_t, 3>, 3>& circles,
                                                       std::int64_t p) {
  std::set<std::array<std::int64_t, 4>> out;
  for (std::int64_t c0 = 0; c0 < p; ++c0) {
    for (std::int64_t c1 = 0; c1 < p; ++c1) {
      for (std::int64_t c2 = 0; c2 < p; ++c2) {
        for (std::int64_t c3 = 0; c3 < p; ++c3) {
          const std::array<std::int64_t, 4> c{c0, c1, c2, c3};
          const auto lead = std::find_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
          if (lead == c.end() || *lead != 1) continue;
          bool on_all = true;
          for (auto& [a, b, r2] : circles) {
            const std::int64_t e = mod(a * c1 + b * c2 + c3 + (a * a + b * b - r2) * c0, p);
            const std::int64_t v = mod(e * e - r2 * mod(c1 * c1 + c2 * c2 - 4 * c0 * c3, p), p);
            on_all = on_all && v == 0;
          }
          if (on_all) out.insert(c);
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST(Config, ParsesShippedFiles) {
  for (const char* name : {"generic.json", "deficient_real.json", "all_real.json", "cpp.json", "ccp_point.json", "ccp_doubled.json",
                           "ppp.json", "tangent.json", "generic_f13.json"}) {
    EXPECT_NO_THROW(ProblemConfig::load(config_path(name))) << name;
  }
  const ProblemConfig f13 = ProblemConfig::load(config_path("generic_f13.json"));
  EXPECT_EQ(f13.field.prime(), 13);
  const ProblemConfig deficient = ProblemConfig::load(config_path("deficient_real.json"));
  EXPECT_EQ(deficient.objects[0].r2, q("49/64"));
  ASSERT_TRUE(deficient.options.svg.has_value());
}

TEST(Config, JsonRoundTrip) {
  const ProblemConfig a = ProblemConfig::load(config_path("deficient_real.json"));
  const ProblemConfig b = ProblemConfig::from_json(a.to_json());
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(Config, RejectsMalformedInput) {
  const std::vector<std::string> bad{
      "{",
      "[]",
      R"({"objects": []})",
      R"({"objects": [{"circle": {"center": [0, 0], "r2": 1}}, {"circle": {"center": [4, 0], "r2": 1}}]})",
      R"({"objects": [{"circle": {"center": [0], "r2": 1}}, {"point": [1, 2]}, {"point": [3, 4]}]})",
      R"({"objects": [{"circle": {"center": [0, 0], "r2": "x"}}, {"point": [1, 2]}, {"point": [3, 4]}]})",
      R"({"objects": [{"line": 1}, {"point": [1, 2]}, {"point": [3, 4]}]})",
      R"({"field": "R", "objects": [{"point": [0, 0]}, {"point": [1, 2]}, {"point": [3, 4]}]})",
      R"({"field": {"Fp": 12}, "objects": [{"point": [0, 0]}, {"point": [1, 2]}, {"point": [3, 4]}]})",
      R"({"radii_branches": [1, 2, 1], "objects": [{"point": [0, 0]}, {"point": [1, 2]}, {"point": [3, 4]}]})",
  };
  for (auto& text : bad) EXPECT_THROW(ProblemConfig::parse(text), ParseError) << text;
  EXPECT_THROW(ProblemConfig::load(config_path("missing.json")), ParseError);
}

TEST(Config, ReductionRejectsBadPrimes) {
  ProblemConfig pc = ProblemConfig::load(config_path("deficient_real.json"));
  try {
    pc.reduced(2);
    FAIL() << "expected InvalidPrime";
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPrime);
  }
  // 1/8 has no residue mod 2; 49/64 is fine mod 3.
  EXPECT_NO_THROW(pc.reduced(3));
}

TEST(Kind, ExpectedClasses) {
  EXPECT_EQ(problem_kind(generic()), ProblemKind::CCC);
  EXPECT_EQ(*expected_class(ProblemKind::CCC, 0), hyperbolic(4, 0));
  EXPECT_EQ(*expected_class(ProblemKind::CPP, 0), hyperbolic(1, 0));
  EXPECT_FALSE(expected_class(ProblemKind::CCP, 0).has_value());
}

TEST(Verify, ShippedConfigs) {
  EXPECT_EQ(cmd_verify(ProblemConfig::load(config_path("generic.json"))).verdict, "PASS");
  EXPECT_EQ(cmd_verify(ProblemConfig::load(config_path("cpp.json"))).verdict, "PASS");
  EXPECT_EQ(cmd_verify(ProblemConfig::load(config_path("ppp.json"))).verdict, "PASS");
  EXPECT_EQ(cmd_verify(ProblemConfig::load(config_path("ccp_doubled.json"))).verdict, "PASS");
  const VerifyReport ccp = cmd_verify(ProblemConfig::load(config_path("ccp_point.json")));
  EXPECT_EQ(ccp.verdict, "REPORT");
  EXPECT_EQ(ccp.exit_code(), kExitOk);
  EXPECT_THROW(cmd_verify(ProblemConfig::load(config_path("tangent.json"))), MathError);
}

TEST(Verify, CcpWithPointInvariants) {
  const VerifyReport r = cmd_verify(ProblemConfig::load(config_path("ccp_point.json")));
  ASSERT_TRUE(r.zerodim.has_value());
  const FormClass& c = r.zerodim->formclass;
  EXPECT_EQ(c.rank, 4);
  EXPECT_EQ(c.disc, 6);
  EXPECT_EQ(*c.signature, 0);
  EXPECT_EQ(c.nontrivial_places(), (std::vector<mpz_class>{kRealPlace, 3}));
  EXPECT_TRUE(r.paths_agree);
}

TEST(Solve, JsonShape) {
  const auto j = cmd_solve(ProblemConfig::load(config_path("generic.json")));
  EXPECT_EQ(j["kind"], "CCC");
  EXPECT_EQ(j["solutions"].size(), 8u);
  EXPECT_EQ(j["distinct_solutions"], 8);
  EXPECT_EQ(j["real_solutions"], 8);
  EXPECT_TRUE(j["radii_split"].get<bool>());
}

TEST(Duality, SabotageFailsCube) {
  const ProblemConfig pc = ProblemConfig::load(config_path("generic.json"));
  const DualityReport ok = cmd_duality(pc);
  EXPECT_TRUE(ok.matches_reference);
  EXPECT_EQ(ok.exit_code(), kExitOk);
  const DualityReport bad = cmd_duality(pc, true);
  EXPECT_FALSE(bad.matches_reference);
  EXPECT_EQ(bad.exit_code(), kExitMath);
}

TEST(Duality, TrialsAreDeterministic) {
  const TrialSummary a = theta_trials(42, 5), b = theta_trials(42, 5);
  EXPECT_EQ(a.matched, 5);
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(Sweep, RowsAndCsv) {
  const ProblemConfig pc = from_configuration(generic());
  const auto rows = cmd_sweep(pc, 2, 20, 1);
  ASSERT_EQ(rows.size(), 8u);  // 2 3 5 7 11 13 17 19
  EXPECT_EQ(rows[0].reason, "char 2 excluded");
  EXPECT_EQ(rows[1].status, "skipped");  // centers collinear mod 3
  const auto find = [&](std::int64_t p) { return *std::find_if(rows.begin(), rows.end(), [&](auto& r) { return r.p == p; }); };
  EXPECT_EQ(find(11).status, "ok");
  EXPECT_EQ(find(11).verdict, "PASS");
  EXPECT_EQ(*find(11).rank, 8);
  EXPECT_EQ(*find(7).rational_solutions, 5u);
  EXPECT_EQ(find(13).status, "skipped");

  const std::string csv = sweep_csv(rows);
  EXPECT_EQ(csv.rfind("p,status,rational_solutions,rank,disc,verdict,reason\r\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\r'), 9);
  EXPECT_NE(csv.find("\"TangentPair(1,3) mod 13\""), std::string::npos);
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  const ProblemConfig pc = from_configuration(generic());
  EXPECT_EQ(sweep_csv(cmd_sweep(pc, 3, 60, 1)), sweep_csv(cmd_sweep(pc, 3, 60, 4)));
}

TEST(Sweep, RangeParsing) {
  EXPECT_EQ(parse_prime_range("5..17"), (std::pair<std::int64_t, std::int64_t>{5, 17}));
  EXPECT_EQ(parse_prime_range("13"), (std::pair<std::int64_t, std::int64_t>{13, 13}));
  EXPECT_THROW(parse_prime_range("5-17"), ParseError);
  EXPECT_THROW(parse_prime_range("a..b"), ParseError);
  EXPECT_THROW(cmd_sweep(from_configuration(generic()), 24, 28), ParseError);
}

TEST(Oracle, FieldSyntax) {
  EXPECT_EQ(parse_field_prime("Fp:13"), 13);
  EXPECT_EQ(parse_field_prime("Fp13"), 13);
  EXPECT_EQ(parse_field_prime("F7"), 7);
  EXPECT_EQ(parse_field_prime("11"), 11);
  EXPECT_THROW(parse_field_prime("Fp:15"), ParseError);
}

TEST(Oracle, EnumerationMatchesIndependentCount) {
  const std::array<std::array<std::int64_t, 3>, 3> circles{{{0, 0, 1}, {4, 0, 1}, {2, 3, 1}}};
  const ProblemConfig pc = from_configuration(generic());
  for (std::int64_t p : {5, 7, 11, 13}) {
    const auto got = enumerate_projective(pc, p);
    const std::set<std::array<std::int64_t, 4>> got_set(got.begin(), got.end());
    EXPECT_EQ(got.size(), got_set.size());
    EXPECT_EQ(got_set, enumerate_oracle(circles, p)) << "p = " << p;
  }
}

TEST(Oracle, GenericPrimesPass) {
  const ProblemConfig pc = from_configuration(generic());
  for (std::int64_t p : {5, 7, 11, 13, 17}) {
    const OracleReport r = cmd_oracle(pc, p);
    EXPECT_TRUE(r.pass) << "p = " << p;
    EXPECT_EQ(r.enumerated, static_cast<std::size_t>(p * p * p + p * p + p + 1));
  }
  EXPECT_EQ(cmd_oracle(pc, 5).at_infinity, 1u);
}

TEST(Oracle, CorruptionIsCaught) {
  const ProblemConfig pc = from_configuration(generic());
  const OracleReport r = cmd_oracle(pc, 11, true);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.exit_code(), kExitMath);
}

TEST(Oracle, RejectsLargeOrCompositeP) {
  const ProblemConfig pc = from_configuration(generic());
  EXPECT_THROW(cmd_oracle(pc, 9), ParseError);
  EXPECT_THROW(cmd_oracle(pc, 223), ParseError);
}

TEST(Render, DeterministicSvg) {
  const ProblemConfig pc = ProblemConfig::load(config_path("deficient_real.json"));
  const std::string a = cmd_render(pc, 800), b = cmd_render(pc, 800);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  const std::regex red("stroke=\"red\""), black("stroke=\"black\"");
  EXPECT_EQ(std::distance(std::sregex_iterator(a.begin(), a.end(), red), std::sregex_iterator()), 4);
  EXPECT_EQ(std::distance(std::sregex_iterator(a.begin(), a.end(), black), std::sregex_iterator()), 3);
  EXPECT_NE(a.find("width=\"800\""), std::string::npos);
}

TEST(Render, AllRealDrawsEightSolutions) {
  const std::string svg = cmd_render(ProblemConfig::load(config_path("all_real.json")), 400);
  const std::regex red("stroke=\"red\"");
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), red), std::sregex_iterator()), 8);
}

TEST(Render, RejectsFiniteFieldAndTinyWidth) {
  EXPECT_THROW(cmd_render(ProblemConfig::load(config_path("generic_f13.json")), 800), ParseError);
  EXPECT_THROW(cmd_render(ProblemConfig::load(config_path("generic.json")), 50), ParseError);
}

TEST(Random, GeneratorsAreSeeded) {
  std::mt19937_64 a(3), b(3);
  const Configuration x = random_ccc(a), y = random_ccc(b);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(x.objects[i].a, y.objects[i].a);
    EXPECT_EQ(x.objects[i].r2, y.objects[i].r2);
  }
  EXPECT_TRUE(x.check().ok());
  std::mt19937_64 c(4);
  EXPECT_EQ(random_cpp(c).point_count(), 2);
}
