#include "apollonius/moduli.hpp"

#include "apollonius/errors.hpp"
#include "apollonius/linalg.hpp"

namespace apollo {

namespace {

std::array<FieldElement, 4> canonicalize(std::array<FieldElement, 4> c) {
  std::size_t lead = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!c[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead == 4) throw MathError(ErrorKind::ZeroArgument, "circle with all coordinates zero");
  const FieldElement inv = c[lead].inv();
  for (auto& x : c) x *= inv;
  return c;
}

void require_circle(const Circle& c, const char* what) {
  if (c.is_degenerate()) throw MathError(ErrorKind::DegenerateCircle, std::string(what) + ": c0 = 0");
}

}  // namespace

Circle::Circle(FieldElement c0, FieldElement c1, FieldElement c2, FieldElement c3)
    : Circle(std::array<FieldElement, 4>{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}) {}

Circle::Circle(std::array<FieldElement, 4> coords) : coords_(canonicalize(std::move(coords))) {}

FieldDescriptor Circle::field() const {
  FieldDescriptor k = coords_[0].field();
  for (std::size_t i = 1; i < 4; ++i) k = common_field(k, coords_[i].field());
  return k;
}

bool Circle::in_base() const {
  for (auto& c : coords_) {
    if (!c.in_base()) return false;
  }
  return true;
}

nlohmann::json Circle::to_json() const {
  nlohmann::json j;
  nlohmann::json c = nlohmann::json::array();
  for (auto& x : coords_) c.push_back(x.str());
  j["coords"] = c;
  if (!is_degenerate()) {
    const CenterRadius cr = center_radius(*this);
    j["center"] = {cr.a.str(), cr.b.str()};
    j["r2"] = cr.r2.str();
  }
  return j;
}

std::string Circle::str() const {
  return "[" + coords_[0].str() + " : " + coords_[1].str() + " : " + coords_[2].str() + " : " + coords_[3].str() + "]";
}

bool operator==(const Circle& a, const Circle& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.coords_[i] != b.coords_[i]) return false;
  }
  return true;
}

CenterRadius center_radius(const Circle& c) {
  require_circle(c, "center_radius");
  const FieldElement two_c0 = c[0] * FieldElement(2);
  CenterRadius out;
  out.a = -c[1] / two_c0;
  out.b = -c[2] / two_c0;
  out.r2 = -c[3] / c[0] + out.a * out.a + out.b * out.b;
  return out;
}

Circle circle_from(const FieldElement& a, const FieldElement& b, const FieldElement& r2) {
  return Circle(FieldElement(1), FieldElement(-2) * a, FieldElement(-2) * b, a * a + b * b - r2);
}

Circle circle_from_json(const nlohmann::json& j, const FieldDescriptor& k) {
  if (j.contains("coords")) {
    const auto& c = j.at("coords");
    if (!c.is_array() || c.size() != 4) throw ParseError("circle coords must be an array of 4 elements");
    return Circle(FieldElement::from_json(k, c[0]), FieldElement::from_json(k, c[1]), FieldElement::from_json(k, c[2]),
                  FieldElement::from_json(k, c[3]));
  }
  if (!j.contains("center") || !j.contains("r2")) throw ParseError("circle needs coords or center and r2");
  const auto& ctr = j.at("center");
  if (!ctr.is_array() || ctr.size() != 2) throw ParseError("circle center must be [a, b]");
  return circle_from(FieldElement::from_json(k, ctr[0]), FieldElement::from_json(k, ctr[1]),
                     FieldElement::from_json(k, j.at("r2")));
}

FieldElement QuadricCone::evaluate(const std::array<FieldElement, 4>& c) const {
  FieldElement acc;
  for (std::size_t i = 0; i < 4; ++i) {
    FieldElement row;
    for (std::size_t j = 0; j < 4; ++j) row += gram[i][j] * c[j];
    acc += c[i] * row;
  }
  return acc;
}

std::array<FieldElement, 4> QuadricCone::gradient(const std::array<FieldElement, 4>& c) const {
  std::array<FieldElement, 4> g;
  for (std::size_t i = 0; i < 4; ++i) {
    FieldElement row;
    for (std::size_t j = 0; j < 4; ++j) row += gram[i][j] * c[j];
    g[i] = FieldElement(2) * row;
  }
  return g;
}

std::size_t QuadricCone::rank() const {
  linalg::Mat<FieldElement> m(4);
  for (std::size_t i = 0; i < 4; ++i) m[i].assign(gram[i].begin(), gram[i].end());
  return linalg::rank(m);
}

FieldElement Hyperplane::evaluate(const std::array<FieldElement, 4>& c) const {
  FieldElement acc;
  for (std::size_t i = 0; i < 4; ++i) acc += coeffs[i] * c[i];
  return acc;
}

QuadricCone cone_of(const Circle& c) {
  require_circle(c, "cone_of");
  const CenterRadius cr = center_radius(c);
  const FieldElement two(2);
  const std::array<FieldElement, 4> l{cr.a * cr.a + cr.b * cr.b + cr.r2, cr.a, cr.b, FieldElement(1)};
  const std::array<FieldElement, 4> x{two * cr.a, FieldElement(1), FieldElement(0), FieldElement(0)};
  const std::array<FieldElement, 4> y{two * cr.b, FieldElement(0), FieldElement(1), FieldElement(0)};
  QuadricCone q{{}, c};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) q.gram[i][j] = l[i] * l[j] - cr.r2 * (x[i] * x[j] + y[i] * y[j]);
  }
  return q;
}

Hyperplane plane_through(const FieldElement& a, const FieldElement& b) {
  return Hyperplane{{a * a + b * b, a, b, FieldElement(1)}};
}

bool tangency_test(const Circle& c1, const Circle& c2) {
  require_circle(c2, "tangency_test");
  return cone_of(c1).evaluate(c2).is_zero();
}

std::string ConfigStatus::str() const {
  switch (kind) {
    case Kind::Ok:
      return "OK";
    case Kind::CollinearCenters:
      return "CollinearCenters";
    case Kind::TangentPair:
      return "TangentPair(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::DegenerateInput:
      return "DegenerateInput(" + std::to_string(i) + ")";
  }
  return "?";
}

ConfigStatus config_check(const Circle& c1, const Circle& c2, const Circle& c3) {
  const std::array<const Circle*, 3> cs{&c1, &c2, &c3};
  for (int i = 0; i < 3; ++i) {
    if (cs[static_cast<std::size_t>(i)]->is_degenerate()) return {ConfigStatus::Kind::DegenerateInput, i + 1, 0};
  }
  const CenterRadius z1 = center_radius(c1), z2 = center_radius(c2), z3 = center_radius(c3);
  const FieldElement delta = (z1.a - z2.a) * (z1.b - z3.b) - (z1.a - z3.a) * (z1.b - z2.b);
  if (delta.is_zero()) return {ConfigStatus::Kind::CollinearCenters, 0, 0};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (tangency_test(*cs[static_cast<std::size_t>(i)], *cs[static_cast<std::size_t>(j)])) {
        return {ConfigStatus::Kind::TangentPair, i + 1, j + 1};
      }
    }
  }
  return {};
}

Circle circle_through_points(const Point2& p1, const Point2& p2, const Point2& p3) {
  linalg::Mat<FieldElement> m;
  for (const Point2* p : {&p1, &p2, &p3}) {
    const Hyperplane h = plane_through(p->x, p->y);
    m.emplace_back(h.coeffs.begin(), h.coeffs.end());
  }
  auto ker = linalg::kernel(m, FieldElement(0), FieldElement(1));
  if (ker.size() != 1) throw MathError(ErrorKind::UnderDetermined, "points do not determine a unique circle");
  return Circle(ker[0][0], ker[0][1], ker[0][2], ker[0][3]);
}

Circle directrix_member(const Circle& c, const std::optional<FieldElement>& t) {
  const CenterRadius cr = center_radius(c);
  const auto r = is_square(cr.r2);
  if (!r) throw MathError(ErrorKind::SquareRootUnavailable, "radius squared " + cr.r2.str() + " is not a square");
  const FieldElement four_r2 = FieldElement(4) * cr.r2;
  if (!t) return circle_from(cr.a - *r, cr.b, four_r2);
  const FieldElement t2 = *t * *t;
  const FieldElement den = FieldElement(1) + t2;
  if (den.is_zero()) throw MathError(ErrorKind::PoleAtT, "1 + t^2 = 0 at t = " + t->str());
  return circle_from(cr.a + *r * (FieldElement(1) - t2) / den, cr.b + *r * FieldElement(2) * *t / den, four_r2);
}

std::array<FieldElement, 6> cone_coefficients_from_directrix(const FieldElement& a, const FieldElement& b,
                                                             const FieldElement& r2) {
  using Lin = std::array<FieldElement, 3>;  // coefficients of c0, c1, c2
  const FieldElement two(2);
  const Lin X{two * a, FieldElement(1), FieldElement(0)};
  const Lin Y{two * b, FieldElement(0), FieldElement(1)};
  Lin Z;
  for (std::size_t k = 0; k < 3; ++k) Z[k] = -a * X[k] - b * Y[k];
  Z[0] -= two * r2;

  // Monomials c0^2, c1^2, c2^2, c0c1, c0c2, c1c2.
  auto product = [](const Lin& u, const Lin& v) {
    std::array<FieldElement, 6> m;
    m[0] = u[0] * v[0];
    m[1] = u[1] * v[1];
    m[2] = u[2] * v[2];
    m[3] = u[0] * v[1] + u[1] * v[0];
    m[4] = u[0] * v[2] + u[2] * v[0];
    m[5] = u[1] * v[2] + u[2] * v[1];
    return m;
  };
  const std::array<std::array<FieldElement, 6>, 6> columns{product(X, X), product(Y, Y), product(Z, Z),
                                                           product(X, Z), product(Y, Z), product(X, Y)};
  const FieldElement four(4);
  const std::vector<FieldElement> target{four * (a * a + b * b - r2), FieldElement(1), FieldElement(1), four * a,
                                         four * b, FieldElement(0)};
  linalg::Mat<FieldElement> m(6, std::vector<FieldElement>(6));
  for (std::size_t row = 0; row < 6; ++row) {
    for (std::size_t col = 0; col < 6; ++col) m[row][col] = columns[col][row];
  }
  auto sol = linalg::solve(m, target);
  if (!sol) throw MathError(ErrorKind::UnderDetermined, "directrix coefficient system is singular (r^2 = 0?)");
  std::array<FieldElement, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = (*sol)[k];
  return out;
}

}  // namespace apollo
