#pragma once

#include <array>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "apollonius/exactfield.hpp"

namespace apollo {

struct Point2 {
  FieldElement x, y;
};

// A point [c0:c1:c2:c3] of P^3, read as the conic c0(x^2+y^2) + z(c1 x + c2 y + c3 z).
// Stored with the first nonzero coordinate scaled to 1.
class Circle {
 public:
  Circle(FieldElement c0, FieldElement c1, FieldElement c2, FieldElement c3);
  explicit Circle(std::array<FieldElement, 4> coords);

  const std::array<FieldElement, 4>& coords() const { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  bool is_degenerate() const { return coords_[0].is_zero(); }
  // Smallest tower containing every coordinate.
  FieldDescriptor field() const;
  bool in_base() const;

  nlohmann::json to_json() const;
  std::string str() const;

  friend bool operator==(const Circle& a, const Circle& b);
  friend bool operator!=(const Circle& a, const Circle& b) { return !(a == b); }

 private:
  std::array<FieldElement, 4> coords_;
};

struct CenterRadius {
  FieldElement a, b, r2;
};

CenterRadius center_radius(const Circle& c);
Circle circle_from(const FieldElement& a, const FieldElement& b, const FieldElement& r2);
Circle circle_from_json(const nlohmann::json& j, const FieldDescriptor& k);

// Quadratic form in (c0, c1, c2, c3) cutting out the circles tangent to `apex`.
struct QuadricCone {
  std::array<std::array<FieldElement, 4>, 4> gram;
  Circle apex;

  FieldElement evaluate(const std::array<FieldElement, 4>& c) const;
  FieldElement evaluate(const Circle& c) const { return evaluate(c.coords()); }
  // Partial derivatives with respect to c0..c3.
  std::array<FieldElement, 4> gradient(const std::array<FieldElement, 4>& c) const;
  std::size_t rank() const;
};

struct Hyperplane {
  std::array<FieldElement, 4> coeffs;

  FieldElement evaluate(const std::array<FieldElement, 4>& c) const;
  FieldElement evaluate(const Circle& c) const { return evaluate(c.coords()); }
};

QuadricCone cone_of(const Circle& c);
Hyperplane plane_through(const FieldElement& a, const FieldElement& b);
bool tangency_test(const Circle& c1, const Circle& c2);

struct ConfigStatus {
  enum class Kind { Ok, CollinearCenters, TangentPair, DegenerateInput };
  Kind kind = Kind::Ok;
  int i = 0, j = 0;  // 1-based pair for TangentPair, index for DegenerateInput

  bool ok() const { return kind == Kind::Ok; }
  std::string str() const;
};

ConfigStatus config_check(const Circle& c1, const Circle& c2, const Circle& c3);

// Unique circle through three points; collinear points give a degenerate (c0 = 0) circle.
Circle circle_through_points(const Point2& p1, const Point2& p2, const Point2& p3);

// Member of the directrix family of circles tangent to c: radius squared 4r^2,
// centre (a + r(1-t^2)/(1+t^2), b + 2rt/(1+t^2)). nullopt means t = infinity.
Circle directrix_member(const Circle& c, const std::optional<FieldElement>& t);

// Coefficients A1..A6 of A1 X^2 + A2 Y^2 + A3 Z^2 + A4 XZ + A5 YZ + A6 XY obtained
// by matching the directrix equation after Z -> -aX - bY - 2r^2 c0.
std::array<FieldElement, 6> cone_coefficients_from_directrix(const FieldElement& a, const FieldElement& b,
                                                             const FieldElement& r2);

}  // namespace apollo
