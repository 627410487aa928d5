#pragma once

#include <array>
#include <nlohmann/json.hpp>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "apollonius/moduli.hpp"
#include "apollonius/quadform.hpp"
#include "apollonius/solver.hpp"

namespace apollo {

using Hypersurface = std::variant<QuadricCone, Hyperplane>;

// Cone for each circle input, incidence plane for each point input.
std::array<Hypersurface, 3> hypersurfaces(const Configuration& cfg);

// Gradient in (c1, c2, c3) at a circle with c0 = 1.
std::array<FieldElement, 3> affine_gradient(const Hypersurface& h, const Circle& at);

// Determinant of the three affine gradients.
FieldElement vol(const std::array<Hypersurface, 3>& objects, const Circle& at);
FieldElement vol(const Configuration& cfg, const ApolloniusSolution& sol);

std::pair<FieldElement, FieldElement> uv(const Configuration& cfg, const ApolloniusSolution& sol, int i);

// Alternating sum of u_i v_m v_n-weighted parallelogram areas.
FieldElement area(const Configuration& cfg, const ApolloniusSolution& sol);
// Same quantity as det of rows (v_i (a_i - alpha), v_i (b_i - beta), u_i).
FieldElement area_det(const Configuration& cfg, const ApolloniusSolution& sol);

// Tr_{k(s)/k} <value>, with k(s) the solution's field of definition.
FormClass beta(const ApolloniusSolution& sol, const FieldElement& value);

bool square_class_equal(const FieldElement& x, const FieldElement& y);

struct IndexReport {
  int label = 0;
  FieldElement vol, area;
  bool same_square_class = false;
  std::optional<FormClass> beta;  // set for closed-point representatives on the split path

  nlohmann::json to_json() const;
};

// True for the solution that stands for its closed point: a representative
// circle, and root 0 when the two roots are Galois conjugate.
bool closed_point_representative(const ApolloniusSolution& sol);

std::vector<IndexReport> index_reports(const Configuration& cfg, const std::vector<ApolloniusSolution>& sols,
                                       bool split);

enum class IndexFormula { Vol, Area };

// Sum of beta over closed points; requires the split-radii path.
FormClass sum_over_closed_points(const Configuration& cfg, const std::vector<ApolloniusSolution>& sols,
                                 IndexFormula formula = IndexFormula::Vol);

}  // namespace apollo
