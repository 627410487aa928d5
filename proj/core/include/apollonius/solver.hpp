#pragma once

#include <array>
#include <nlohmann/json.hpp>
#include <vector>

#include "apollonius/exactfield.hpp"
#include "apollonius/moduli.hpp"

namespace apollo {

struct InputObject {
  enum class Kind { Circle, Point };
  Kind kind = Kind::Circle;
  FieldElement a, b, r2;  // r2 = 0 for points

  static InputObject circle(FieldElement a, FieldElement b, FieldElement r2);
  static InputObject point(FieldElement x, FieldElement y);

  bool is_point() const { return kind == Kind::Point; }
  // Points are returned as radius-zero circles.
  Circle as_circle() const;
  nlohmann::json to_json() const;
};

struct Configuration {
  FieldDescriptor base;
  std::array<InputObject, 3> objects;

  // Objects are promoted into `base`; rational data reduces modulo p for F_p.
  static Configuration over(const FieldDescriptor& base, const std::array<InputObject, 3>& objects);

  int point_count() const;
  ConfigStatus check() const;
};

using SignVector = std::array<int, 3>;

// (1,1,1), (1,1,-1), (1,-1,1), (1,-1,-1); class k owns labels 2k+1 and 2k+2.
const std::array<SignVector, 4>& sign_classes();

// Chosen square roots r_i of the input radii squared.
struct Radii {
  FieldDescriptor field;  // base extended by every irrational r_i
  std::array<FieldElement, 3> r;
  bool split = true;  // every r_i lies in the base field
};

// branches[i] = -1 selects the negated root for input i.
Radii choose_radii(const Configuration& cfg, const std::array<int, 3>& branches = {1, 1, 1});

FieldElement delta(const std::array<Point2, 3>& centers);
FieldElement delta(const Configuration& cfg);

struct CoaklayCoefficients {
  FieldElement A1, B1, A2, B2, M, N;
};

// A2, B2 use the configuration's r_i^2; A1, B1, M, N use the supplied roots.
CoaklayCoefficients coaklay_coefficients(const Configuration& cfg, const std::array<FieldElement, 3>& r,
                                         const SignVector& s);

// a x^2 + b x + c
struct QuadraticPoly {
  FieldElement a, b, c;

  FieldElement evaluate(const FieldElement& x) const { return (a * x + b) * x + c; }
  FieldElement discriminant() const { return b * b - FieldElement(4) * a * c; }
  std::string str() const;
};

QuadraticPoly coaklay_poly(const CoaklayCoefficients& k, const std::array<FieldElement, 3>& r, const SignVector& s);

struct TangencyData {
  Point2 tau;
  FieldElement u, v;
};

struct ApolloniusSolution {
  SignVector sign{1, 1, 1};
  int sign_class = 0;
  int root_index = 0;
  int label = 1;             // 1..8
  int group_leader = 0;      // first sign class with the same quadratic
  FieldElement rho, alpha, beta;
  Circle circle{FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(0)};
  FieldDescriptor field;     // tower holding every coordinate
  bool adjoined = false;     // the discriminant of f_s was not a square
  bool real = false;         // real under the standard embedding (Q only)
  int multiplicity = 1;
  std::array<TangencyData, 3> tangency;

  bool representative() const { return sign_class == group_leader; }
  nlohmann::json to_json() const;
};

// tau_i = z_i + lambda (gamma - z_i), lambda = (d^2 + r_i^2 - rho^2) / (2 d^2).
Point2 tangency_point(const Configuration& cfg, const ApolloniusSolution& sol, int i);
TangencyData tangency_data(const Configuration& cfg, const ApolloniusSolution& sol, int i);

struct SolveOptions {
  // Accept tangent input pairs and repeated roots (used by the brute-force oracle).
  bool allow_degenerate = false;
};

// All eight labelled solutions (one for three points). Requires config_check = OK
// unless allow_degenerate is set.
std::vector<ApolloniusSolution> solve_all(const Configuration& cfg, const Radii& radii, SolveOptions opts = {});
std::vector<ApolloniusSolution> solve_all(const Configuration& cfg, SolveOptions opts = {});

// One entry per geometrically distinct circle.
std::vector<ApolloniusSolution> distinct_solutions(const std::vector<ApolloniusSolution>& all);

}  // namespace apollo
