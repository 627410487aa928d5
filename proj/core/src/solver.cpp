#include "apollonius/solver.hpp"

#include <stdexcept>

#include "apollonius/errors.hpp"

namespace apollo {

InputObject InputObject::circle(FieldElement a, FieldElement b, FieldElement r2) {
  return InputObject{Kind::Circle, std::move(a), std::move(b), std::move(r2)};
}

InputObject InputObject::point(FieldElement x, FieldElement y) {
  return InputObject{Kind::Point, std::move(x), std::move(y), FieldElement(0)};
}

Circle InputObject::as_circle() const { return circle_from(a, b, r2); }

nlohmann::json InputObject::to_json() const {
  if (is_point()) return {{"point", {a.str(), b.str()}}};
  return {{"circle", {{"center", {a.str(), b.str()}}, {"r2", r2.str()}}}};
}

Configuration Configuration::over(const FieldDescriptor& base, const std::array<InputObject, 3>& objects) {
  Configuration cfg{base, objects};
  for (auto& o : cfg.objects) {
    o.a = o.a.promote(base);
    o.b = o.b.promote(base);
    o.r2 = o.r2.promote(base);
  }
  return cfg;
}

int Configuration::point_count() const {
  int n = 0;
  for (auto& o : objects) n += o.is_point() ? 1 : 0;
  return n;
}

ConfigStatus Configuration::check() const {
  return config_check(objects[0].as_circle(), objects[1].as_circle(), objects[2].as_circle());
}

const std::array<SignVector, 4>& sign_classes() {
  static const std::array<SignVector, 4> classes{{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}};
  return classes;
}

Radii choose_radii(const Configuration& cfg, const std::array<int, 3>& branches) {
  Radii out;
  out.field = cfg.base;
  for (std::size_t i = 0; i < 3; ++i) {
    const FieldElement& r2 = cfg.objects[i].r2;
    const FieldElement sign(branches[i] < 0 ? -1 : 1);
    if (r2.is_zero()) {
      out.r[i] = FieldElement::zero(cfg.base);
      continue;
    }
    if (auto w = is_square(out.field, r2)) {
      out.r[i] = sign * *w;
      if (!w->in_base()) out.split = false;
      continue;
    }
    const TowerRoot tr = sqrt_in_tower(out.field, r2, "r" + std::to_string(i + 1));
    out.field = tr.field;
    out.r[i] = sign * tr.root;
    out.split = false;
  }
  return out;
}

FieldElement delta(const std::array<Point2, 3>& z) {
  return (z[0].x - z[1].x) * (z[0].y - z[2].y) - (z[0].x - z[2].x) * (z[0].y - z[1].y);
}

FieldElement delta(const Configuration& cfg) {
  const auto& o = cfg.objects;
  return delta({Point2{o[0].a, o[0].b}, Point2{o[1].a, o[1].b}, Point2{o[2].a, o[2].b}});
}

CoaklayCoefficients coaklay_coefficients(const Configuration& cfg, const std::array<FieldElement, 3>& r,
                                         const SignVector& s) {
  const FieldElement dlt = delta(cfg);
  if (dlt.is_zero()) throw MathError(ErrorKind::CollinearCenters, "centers are collinear (Delta = 0)");
  const auto& o = cfg.objects;
  const FieldElement &a1 = o[0].a, &a2 = o[1].a, &a3 = o[2].a;
  const FieldElement &b1 = o[0].b, &b2 = o[1].b, &b3 = o[2].b;
  auto D = [&](std::size_t i, std::size_t j) {
    return o[i].a * o[i].a - o[j].a * o[j].a + o[i].b * o[i].b - o[j].b * o[j].b - (o[i].r2 - o[j].r2);
  };
  const FieldElement D12 = D(0, 1), D13 = D(0, 2);
  const FieldElement sr1 = FieldElement(s[0]) * r[0];
  const FieldElement sr2 = FieldElement(s[1]) * r[1];
  const FieldElement sr3 = FieldElement(s[2]) * r[2];
  CoaklayCoefficients k;
  k.A1 = ((sr1 - sr2) * (b1 - b3) - (sr1 - sr3) * (b1 - b2)) / dlt;
  k.B1 = ((sr1 - sr3) * (a1 - a2) - (sr1 - sr2) * (a1 - a3)) / dlt;
  const FieldElement two_dlt = FieldElement(2) * dlt;
  k.A2 = ((b1 - b3) * D12 - (b1 - b2) * D13) / two_dlt;
  k.B2 = ((a1 - a2) * D13 - (a1 - a3) * D12) / two_dlt;
  k.M = k.A1 * sr1 + k.A2 - a1;
  k.N = k.B1 * sr1 + k.B2 - b1;
  return k;
}

std::string QuadraticPoly::str() const { return "(" + a.str() + ")x^2 + (" + b.str() + ")x + (" + c.str() + ")"; }

QuadraticPoly coaklay_poly(const CoaklayCoefficients& k, const std::array<FieldElement, 3>& r, const SignVector& s) {
  const FieldElement sr1 = FieldElement(s[0]) * r[0];
  const FieldElement lead = FieldElement(1) - k.A1 * k.A1 - k.B1 * k.B1;
  const FieldElement lin = k.M * k.A1 + k.N * k.B1;
  const FieldElement two(2);
  // lead (x - sr1)^2 - 2 lin (x - sr1) - M^2 - N^2, expanded.
  QuadraticPoly f;
  f.a = lead;
  f.b = -two * lead * sr1 - two * lin;
  f.c = lead * sr1 * sr1 + two * lin * sr1 - k.M * k.M - k.N * k.N;
  return f;
}

nlohmann::json ApolloniusSolution::to_json() const {
  nlohmann::json j;
  j["label"] = label;
  j["sign"] = sign;
  j["root_index"] = root_index;
  j["rho"] = rho.str();
  j["center"] = {alpha.str(), beta.str()};
  j["circle"] = circle.to_json();
  j["field"] = field.to_json();
  j["multiplicity"] = multiplicity;
  j["real"] = real;
  nlohmann::json t = nlohmann::json::array();
  for (auto& d : tangency) t.push_back({{"tau", {d.tau.x.str(), d.tau.y.str()}}, {"u", d.u.str()}, {"v", d.v.str()}});
  j["tangency"] = t;
  return j;
}

Point2 tangency_point(const Configuration& cfg, const ApolloniusSolution& sol, int i) {
  const InputObject& o = cfg.objects.at(static_cast<std::size_t>(i));
  if (o.is_point()) return Point2{o.a, o.b};
  const FieldElement dx = sol.alpha - o.a, dy = sol.beta - o.b;
  const FieldElement d2 = dx * dx + dy * dy;
  if (d2.is_zero()) {
    throw MathError(ErrorKind::ConcentricDegeneracy, "solution " + std::to_string(sol.label) + " is concentric with input " +
                                                         std::to_string(i + 1));
  }
  const FieldElement lambda = (d2 + o.r2 - sol.rho * sol.rho) / (FieldElement(2) * d2);
  return Point2{o.a + lambda * dx, o.b + lambda * dy};
}

TangencyData tangency_data(const Configuration& cfg, const ApolloniusSolution& sol, int i) {
  const InputObject& o = cfg.objects.at(static_cast<std::size_t>(i));
  TangencyData t;
  t.tau = tangency_point(cfg, sol, i);
  if (o.is_point()) {
    t.u = FieldElement(1);
    t.v = FieldElement(1);
    return t;
  }
  const FieldElement zx = o.a - t.tau.x, zy = o.b - t.tau.y;  // z_i - tau_i
  t.u = zx * (o.a - sol.alpha) + zy * (o.b - sol.beta);
  t.v = zx * (t.tau.x - sol.alpha) + zy * (t.tau.y - sol.beta);
  return t;
}

namespace {

void verify_solution(const Configuration& cfg, const ApolloniusSolution& sol) {
  for (std::size_t i = 0; i < 3; ++i) {
    const InputObject& o = cfg.objects[i];
    const FieldElement val = o.is_point() ? plane_through(o.a, o.b).evaluate(sol.circle)
                                          : cone_of(o.as_circle()).evaluate(sol.circle);
    if (!val.is_zero()) {
      throw std::logic_error("solution " + std::to_string(sol.label) + " is not tangent to input " +
                             std::to_string(i + 1));
    }
  }
}

ApolloniusSolution through_points(const Configuration& cfg, const Radii& radii) {
  const auto& o = cfg.objects;
  ApolloniusSolution sol;
  sol.circle = circle_through_points({o[0].a, o[0].b}, {o[1].a, o[1].b}, {o[2].a, o[2].b});
  const CenterRadius cr = center_radius(sol.circle);
  sol.alpha = cr.a;
  sol.beta = cr.b;
  const TowerRoot tr = sqrt_in_tower(radii.field, cr.r2, "rho");
  sol.rho = tr.root;
  sol.field = cr.r2.field();
  sol.adjoined = false;
  sol.real = cfg.base.prime() == 0;
  for (int i = 0; i < 3; ++i) sol.tangency[static_cast<std::size_t>(i)] = tangency_data(cfg, sol, i);
  verify_solution(cfg, sol);
  return sol;
}

}  // namespace

std::vector<ApolloniusSolution> solve_all(const Configuration& cfg, const Radii& radii, SolveOptions opts) {
  const ConfigStatus st = cfg.check();
  switch (st.kind) {
    case ConfigStatus::Kind::Ok:
      break;
    case ConfigStatus::Kind::TangentPair:
      if (opts.allow_degenerate) break;
      throw MathError(ErrorKind::TangentPair, "inputs " + std::to_string(st.i) + " and " + std::to_string(st.j) +
                                                 " are tangent");
    case ConfigStatus::Kind::CollinearCenters:
      throw MathError(ErrorKind::CollinearCenters, "centers are collinear (Delta = 0)");
    case ConfigStatus::Kind::DegenerateInput:
      throw MathError(ErrorKind::DegenerateCircle, "input " + std::to_string(st.i) + " is degenerate");
  }
  if (cfg.point_count() == 3) return {through_points(cfg, radii)};

  const auto& classes = sign_classes();
  std::array<int, 4> leader{};
  for (std::size_t k = 0; k < 4; ++k) {
    leader[k] = static_cast<int>(k);
    for (std::size_t m = 0; m < k; ++m) {
      bool same = true;
      for (std::size_t i = 0; i < 3; ++i) {
        if (classes[k][i] != classes[m][i] && !radii.r[i].is_zero()) same = false;
      }
      if (same) {
        leader[k] = static_cast<int>(m);
        break;
      }
    }
  }
  std::array<int, 4> group_size{};
  for (int l : leader) ++group_size[static_cast<std::size_t>(l)];
  const int points_factor = 1 << cfg.point_count();

  std::vector<ApolloniusSolution> out;
  for (std::size_t k = 0; k < 4; ++k) {
    const SignVector& s = classes[k];
    const CoaklayCoefficients co = coaklay_coefficients(cfg, radii.r, s);
    const QuadraticPoly f = coaklay_poly(co, radii.r, s);
    const bool linear = f.a.is_zero();
    if (linear && (!opts.allow_degenerate || f.b.is_zero())) {
      throw MathError(ErrorKind::InfiniteRadius, "leading coefficient of f_s vanishes (common tangent line)");
    }
    const FieldElement disc = f.discriminant();
    if (disc.is_zero() && !opts.allow_degenerate) throw MathError(ErrorKind::TangentPair, "f_s has a repeated root");
    const TowerRoot tr = (disc.is_zero() || linear) ? TowerRoot{radii.field, FieldElement::zero(radii.field), false}
                                                    : sqrt_in_tower(radii.field, disc, "s" + std::to_string(k + 1));
    const int mult = group_size[static_cast<std::size_t>(leader[k])] / points_factor;
    for (int root = 0; root < 2; ++root) {
      ApolloniusSolution sol;
      sol.sign = s;
      sol.sign_class = static_cast<int>(k);
      sol.root_index = root;
      sol.label = 2 * static_cast<int>(k) + root + 1;
      sol.group_leader = leader[k];
      const FieldElement sq = root == 0 ? tr.root : -tr.root;
      // The finite root of a linear f_s; its partner lies at infinity.
      sol.rho = linear ? -f.c / f.b : (-f.b + sq) / (FieldElement(2) * f.a);
      sol.alpha = co.A1 * sol.rho + co.A2;
      sol.beta = co.B1 * sol.rho + co.B2;
      sol.circle = circle_from(sol.alpha, sol.beta, sol.rho * sol.rho);
      sol.field = tr.field;
      sol.adjoined = tr.adjoined;
      sol.real = cfg.base.prime() == 0 && tr.field.has_embedding();
      sol.multiplicity = mult > 0 ? mult : 1;
      for (int i = 0; i < 3; ++i) {
        try {
          sol.tangency[static_cast<std::size_t>(i)] = tangency_data(cfg, sol, i);
        } catch (const MathError&) {
          if (!opts.allow_degenerate) throw;
        }
      }
      verify_solution(cfg, sol);
      out.push_back(std::move(sol));
    }
  }
  return out;
}

std::vector<ApolloniusSolution> solve_all(const Configuration& cfg, SolveOptions opts) {
  return solve_all(cfg, choose_radii(cfg), opts);
}

std::vector<ApolloniusSolution> distinct_solutions(const std::vector<ApolloniusSolution>& all) {
  std::vector<ApolloniusSolution> out;
  for (auto& s : all) {
    if (s.representative()) out.push_back(s);
  }
  return out;
}

}  // namespace apollo
