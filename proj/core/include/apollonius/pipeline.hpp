#pragma once

#include <array>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "apollonius/duality.hpp"
#include "apollonius/quadform.hpp"
#include "apollonius/solver.hpp"
#include "apollonius/zerodim.hpp"

namespace apollo {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitMath = 2 };

struct ProblemOptions {
  bool check_main = true;
  bool per_point = true;
  bool duality = false;
  std::optional<std::string> svg;
};

// Input data is kept over Q and reduced on demand.
struct ProblemConfig {
  FieldDescriptor field;
  std::array<InputObject, 3> objects;
  std::array<int, 3> branches{1, 1, 1};
  ProblemOptions options;

  static ProblemConfig from_json(const nlohmann::json& j);
  static ProblemConfig parse(const std::string& text);
  static ProblemConfig load(const std::string& path);
  nlohmann::json to_json() const;

  Configuration configuration() const;
  Configuration reduced(std::int64_t p) const;  // InvalidPrime / DivisionByZero on bad reductions
};

enum class ProblemKind { CCC, CCP, CPP, PPP };
ProblemKind problem_kind(const Configuration& cfg);
std::string kind_name(ProblemKind k);

// 4H for CCC, H for CPP, <1> for PPP; none for CCP.
std::optional<FormClass> expected_class(ProblemKind k, std::int64_t prime);

nlohmann::json cmd_solve(const ProblemConfig& pc);

struct VerifyReport {
  ProblemKind kind = ProblemKind::CCC;
  std::optional<FormClass> expected;
  std::optional<FormClass> per_point_vol;
  std::optional<FormClass> per_point_area;
  std::string per_point_note;
  std::optional<ZeroDimReport> zerodim;
  std::string zerodim_note;
  bool paths_agree = true;
  std::string verdict;  // PASS, FAIL or REPORT
  nlohmann::json to_json() const;
  int exit_code() const { return verdict == "FAIL" ? kExitMath : kExitOk; }
};

VerifyReport cmd_verify(const ProblemConfig& pc);
VerifyReport verify_configuration(const Configuration& cfg, const std::array<int, 3>& branches, bool per_point);

struct DualityReport {
  std::array<ThetaMatrix, 3> thetas;
  bool matches_reference = false;
  CubeReport cube;
  std::vector<SumCheck> inversive;
  std::array<std::vector<SumCheck>, 3> degenerate;
  nlohmann::json to_json() const;
  int exit_code() const { return cube.ok() ? kExitOk : kExitMath; }
};

// `sabotage` replaces theta_2 by the identity (test mode).
DualityReport cmd_duality(const ProblemConfig& pc, bool sabotage = false);
DualityReport duality_report(const Configuration& cfg, const Radii& radii, bool sabotage = false);

struct SweepRow {
  std::int64_t p = 0;
  std::string status;  // "ok" or "skipped"
  std::optional<std::size_t> rational_solutions;
  std::optional<int> rank;
  std::optional<std::string> disc;
  std::string verdict;
  std::string reason;
};

std::vector<SweepRow> cmd_sweep(const ProblemConfig& pc, std::int64_t lo, std::int64_t hi, unsigned threads = 0);
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::pair<std::int64_t, std::int64_t> parse_prime_range(const std::string& text);  // "lo..hi" or "p"

using AffinePoint = std::array<std::int64_t, 3>;  // (c1, c2, c3) with c0 = 1

struct OracleReport {
  std::int64_t p = 0;
  std::size_t enumerated = 0;
  std::vector<AffinePoint> brute_force;
  std::size_t at_infinity = 0;
  std::vector<AffinePoint> computed;
  std::vector<std::string> notes;
  bool pass = false;
  nlohmann::json to_json() const;
  int exit_code() const { return pass ? kExitOk : kExitMath; }
};

// Brute-force points on all three quadrics of P^3(F_p), evaluated with int64 arithmetic.
std::vector<std::array<std::int64_t, 4>> enumerate_projective(const ProblemConfig& pc, std::int64_t p,
                                                              bool corrupt = false);
OracleReport cmd_oracle(const ProblemConfig& pc, std::int64_t p, bool corrupt = false);
std::int64_t parse_field_prime(const std::string& text);  // "Fp:13", "13"

std::string cmd_render(const ProblemConfig& pc, int width);

// Seeded random transverse configurations with small integer data over Q.
Configuration random_ccc(std::mt19937_64& rng, bool square_radii = true);
Configuration random_cpp(std::mt19937_64& rng);

// Theta and cube checks on `trials` random configurations.
struct TrialSummary {
  int trials = 0;
  int matched = 0;
  int degenerate = 0;  // DegenerateMerge, redrawn
  nlohmann::json to_json() const { return {{"trials", trials}, {"matched", matched}, {"redrawn", degenerate}}; }
};
TrialSummary theta_trials(std::uint64_t seed, int trials);

}  // namespace apollo
