#include "apollonius/localindex.hpp"

#include "apollonius/errors.hpp"
#include "apollonius/linalg.hpp"

namespace apollo {

std::array<Hypersurface, 3> hypersurfaces(const Configuration& cfg) {
  auto make = [&](const InputObject& o) -> Hypersurface {
    if (o.is_point()) return plane_through(o.a, o.b);
    return cone_of(o.as_circle());
  };
  return {make(cfg.objects[0]), make(cfg.objects[1]), make(cfg.objects[2])};
}

std::array<FieldElement, 3> affine_gradient(const Hypersurface& h, const Circle& at) {
  if (at.is_degenerate()) throw MathError(ErrorKind::DegenerateSolution, "solution lies at infinity (c0 = 0)");
  if (const auto* plane = std::get_if<Hyperplane>(&h)) return {plane->coeffs[1], plane->coeffs[2], plane->coeffs[3]};
  const auto g = std::get<QuadricCone>(h).gradient(at.coords());
  return {g[1], g[2], g[3]};
}

FieldElement vol(const std::array<Hypersurface, 3>& objects, const Circle& at) {
  linalg::Mat<FieldElement> m;
  for (auto& h : objects) {
    const auto g = affine_gradient(h, at);
    m.emplace_back(g.begin(), g.end());
  }
  return linalg::det3(m);
}

FieldElement vol(const Configuration& cfg, const ApolloniusSolution& sol) { return vol(hypersurfaces(cfg), sol.circle); }

std::pair<FieldElement, FieldElement> uv(const Configuration& cfg, const ApolloniusSolution& sol, int i) {
  const TangencyData t = tangency_data(cfg, sol, i);
  return {t.u, t.v};
}

FieldElement area(const Configuration& cfg, const ApolloniusSolution& sol) {
  if (sol.circle.is_degenerate()) throw MathError(ErrorKind::DegenerateSolution, "solution has no center");
  const auto& o = cfg.objects;
  std::array<FieldElement, 3> u, v;
  for (std::size_t i = 0; i < 3; ++i) std::tie(u[i], v[i]) = uv(cfg, sol, static_cast<int>(i));
  FieldElement total;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t m = i == 0 ? 1 : 0;
    const std::size_t n = i == 2 ? 1 : 2;
    const FieldElement par = (o[m].a - sol.alpha) * (o[n].b - sol.beta) - (o[n].a - sol.alpha) * (o[m].b - sol.beta);
    const FieldElement term = u[i] * v[m] * v[n] * par;
    total += i % 2 == 0 ? term : -term;
  }
  return total;
}

FieldElement area_det(const Configuration& cfg, const ApolloniusSolution& sol) {
  if (sol.circle.is_degenerate()) throw MathError(ErrorKind::DegenerateSolution, "solution has no center");
  linalg::Mat<FieldElement> m;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [u, v] = uv(cfg, sol, static_cast<int>(i));
    const InputObject& o = cfg.objects[i];
    m.push_back({v * (o.a - sol.alpha), v * (o.b - sol.beta), u});
  }
  return linalg::det3(m);
}

FormClass beta(const ApolloniusSolution& sol, const FieldElement& value) {
  if (value.is_zero()) throw MathError(ErrorKind::ZeroIndex, "index vanishes at solution " + std::to_string(sol.label));
  const FieldElement x = value.promote(common_field(sol.field, value.field()));
  if (x.field().node() != sol.field.node()) {
    throw MathError(ErrorKind::NotSplitRadii, "value does not live in the field of definition of the solution");
  }
  return classify(trace_form(sol.field, x));
}

bool square_class_equal(const FieldElement& x, const FieldElement& y) {
  if (x.is_zero() || y.is_zero()) throw MathError(ErrorKind::ZeroArgument, "square class of zero");
  return is_square(x / y).has_value();
}

nlohmann::json IndexReport::to_json() const {
  nlohmann::json j{{"solution_id", label},
                   {"vol", vol.str()},
                   {"area", area.str()},
                   {"same_square_class", same_square_class}};
  j["beta"] = beta ? beta->to_json() : nlohmann::json(nullptr);
  return j;
}

bool closed_point_representative(const ApolloniusSolution& sol) {
  return sol.representative() && (!sol.adjoined || sol.root_index == 0);
}

std::vector<IndexReport> index_reports(const Configuration& cfg, const std::vector<ApolloniusSolution>& sols,
                                       bool split) {
  const auto objects = hypersurfaces(cfg);
  std::vector<IndexReport> out;
  for (auto& s : sols) {
    if (!s.representative()) continue;
    IndexReport r;
    r.label = s.label;
    r.vol = vol(objects, s.circle);
    r.area = area(cfg, s);
    r.same_square_class = !r.vol.is_zero() && !r.area.is_zero() && square_class_equal(r.vol, r.area);
    if (split && closed_point_representative(s) && !r.vol.is_zero()) r.beta = beta(s, r.vol);
    out.push_back(std::move(r));
  }
  return out;
}

FormClass sum_over_closed_points(const Configuration& cfg, const std::vector<ApolloniusSolution>& sols,
                                 IndexFormula formula) {
  const auto objects = hypersurfaces(cfg);
  std::optional<FormClass> total;
  for (auto& s : sols) {
    if (!closed_point_representative(s)) continue;
    if (s.field.depth() > cfg.base.depth() + (s.adjoined ? 1 : 0)) {
      throw MathError(ErrorKind::NotSplitRadii, "per-point indices need every radius in the base field");
    }
    const FieldElement value = formula == IndexFormula::Vol ? vol(objects, s.circle) : area(cfg, s);
    const FormClass b = beta(s, value);
    total = total ? add_forms(*total, b) : b;
  }
  if (!total) throw MathError(ErrorKind::DegenerateSolution, "no solutions to sum over");
  return *total;
}

}  // namespace apollo
