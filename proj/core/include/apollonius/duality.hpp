#pragma once

#include <array>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "apollonius/polynomial.hpp"
#include "apollonius/quadform.hpp"
#include "apollonius/solver.hpp"

namespace apollo {

// How the radius-independent center terms A2, B2 follow the degeneration.
enum class CenterTerms {
  Fixed,   // A2, B2 keep the original r_i^2
  Scaled,  // r_i -> t r_i everywhere, including A2, B2
};

// f^i_{s,t} with coefficients in k[t]; a, b, c of a x^2 + b x + c.
struct FamilyPoly {
  TPoly a, b, c;

  QuadraticPoly at(const FieldElement& t) const;
  TPoly discriminant() const;
};

// i is 1-based: the input whose radius shrinks to zero.
FamilyPoly family_poly(const Configuration& cfg, const Radii& radii, const SignVector& s, int i,
                       CenterTerms mode = CenterTerms::Fixed);

// Index 1..8 of a solution: 2k + 1 + root_index for sign class k.
int solution_index(int sign_class, int root_index);

using PermMatrix = std::array<std::array<int, 8>, 8>;

struct ThetaMatrix {
  PermMatrix m{};

  static ThetaMatrix identity();
  static ThetaMatrix from_pairs(const std::vector<std::pair<int, int>>& pairs);  // 1-based, symmetric

  int image(int n) const;  // 1-based; 0 if row n is not a unit vector
  bool is_permutation() const;
  bool symmetric() const;
  bool involution() const;
  bool fixed_point_free() const;

  ThetaMatrix operator*(const ThetaMatrix& o) const;
  bool operator==(const ThetaMatrix& o) const { return m == o.m; }

  std::string str() const;  // 8 rows of 8 bits
  nlohmann::json to_json() const;
};

// The three matrices obtained by symbolic specialization, and theta_1 theta_2 theta_3.
const std::array<ThetaMatrix, 3>& reference_thetas();
const ThetaMatrix& reference_inversive();

// Matches the eight t = 0 circles of the i-th family by exact coordinate equality.
ThetaMatrix theta(const Configuration& cfg, const Radii& radii, int i, CenterTerms mode = CenterTerms::Fixed);

// {1,2}, {3,4}, {5,6}, {7,8}.
std::vector<std::pair<int, int>> inversive_pairs();
ThetaMatrix inversive_matrix();

struct CubeReport {
  bool no_fixed_points = false;       // (i)
  bool distinct_images = false;       // (ii)
  bool commute = false;               // (iii)
  bool product_fixed_point_free = false;  // (iv)
  bool connected = false;
  bool trivalent = false;
  bool bipartite = false;
  bool product_is_inversive = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

CubeReport cube_check(const std::array<ThetaMatrix, 3>& thetas);

enum class CheckState { Pass, Fail, HypothesisNotMet };
std::string check_state_name(CheckState s);

struct SumCheck {
  std::vector<int> indices;  // 1-based solution indices summed
  CheckState state = CheckState::HypothesisNotMet;
  std::string reason;
  bool straddles_residue_fields = false;
  std::optional<FormClass> sum;
  std::optional<FormClass> expected;
  nlohmann::json to_json() const;
};

// beta(q) + beta(q') against the hyperbolic form of matching rank, per inversive pair.
std::vector<SumCheck> inversive_sum_check(const Configuration& cfg, const Radii& radii);

// beta over {q, q', theta_i q, theta_i q'} against twice the hyperbolic form of matching rank.
std::vector<SumCheck> degen_dual_sum_check(const Configuration& cfg, const Radii& radii, int i,
                                           const ThetaMatrix& theta_i);

struct RamificationEntry {
  SignVector sign;
  TPoly discriminant;                 // in t
  bool base_coefficients = false;     // roots are only searched when true
  std::vector<Scalar> roots;          // base-field roots of the discriminant
  std::vector<int> remaining_degrees;  // degree left after removing base-field roots
  bool vanishes_at_zero = false;
  std::vector<std::pair<std::string, bool>> evaluations;  // t value, discriminant vanishes
  nlohmann::json to_json() const;
};

struct RamificationReport {
  int i = 1;
  std::vector<RamificationEntry> entries;
  bool fiber_zero_all_double = false;  // every pair f_{s,0} = f_{s',0} merges at t = 0
  nlohmann::json to_json() const;
};

RamificationReport ramification_scan(const Configuration& cfg, const Radii& radii, int i,
                                     const std::vector<FieldElement>& t_values);

}  // namespace apollo
