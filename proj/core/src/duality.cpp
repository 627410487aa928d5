#include "apollonius/duality.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "apollonius/errors.hpp"
#include "apollonius/localindex.hpp"

namespace apollo {

namespace {

struct FamilyTerms {
  TPoly A1, B1, A2, B2, sr1;
};

TPoly tconst(const FieldElement& c) { return TPoly(std::vector<FieldElement>{c}); }
TPoly tlinear(const FieldElement& c0, const FieldElement& c1) { return TPoly(std::vector<FieldElement>{c0, c1}); }

FamilyTerms family_terms(const Configuration& cfg, const Radii& radii, const SignVector& s, int i,
                         CenterTerms mode) {
  if (i < 1 || i > 3) throw std::invalid_argument("degenerating input must be 1, 2 or 3");
  const auto idx = static_cast<std::size_t>(i - 1);
  std::array<FieldElement, 3> r0 = radii.r;
  r0[idx] = FieldElement::zero(radii.field);
  const CoaklayCoefficients k1 = coaklay_coefficients(cfg, radii.r, s);
  const CoaklayCoefficients k0 = coaklay_coefficients(cfg, r0, s);

  FamilyTerms f;
  f.A1 = tlinear(k0.A1, k1.A1 - k0.A1);
  f.B1 = tlinear(k0.B1, k1.B1 - k0.B1);
  if (mode == CenterTerms::Fixed) {
    f.A2 = tconst(k1.A2);
    f.B2 = tconst(k1.B2);
  } else {
    Configuration shrunk = cfg;
    shrunk.objects[idx].r2 = FieldElement::zero(cfg.base);
    const CoaklayCoefficients z = coaklay_coefficients(shrunk, r0, s);
    const FieldElement zero = FieldElement::zero(radii.field);
    f.A2 = TPoly(std::vector<FieldElement>{z.A2, zero, k1.A2 - z.A2});
    f.B2 = TPoly(std::vector<FieldElement>{z.B2, zero, k1.B2 - z.B2});
  }
  const FieldElement sr1 = FieldElement(s[0]) * radii.r[0];
  f.sr1 = i == 1 ? tlinear(FieldElement::zero(radii.field), sr1) : tconst(sr1);
  return f;
}

FamilyPoly assemble(const Configuration& cfg, const FamilyTerms& f) {
  const TPoly M = f.A1 * f.sr1 + f.A2 - tconst(cfg.objects[0].a);
  const TPoly N = f.B1 * f.sr1 + f.B2 - tconst(cfg.objects[0].b);
  const TPoly L = tconst(FieldElement(1)) - f.A1 * f.A1 - f.B1 * f.B1;
  const TPoly K = M * f.A1 + N * f.B1;
  const TPoly two = tconst(FieldElement(2));
  FamilyPoly out;
  out.a = L;
  out.b = TPoly() - two * L * f.sr1 - two * K;
  out.c = L * f.sr1 * f.sr1 + two * K * f.sr1 - M * M - N * N;
  return out;
}

std::string tpoly_str(const TPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = f.degree(); d >= 0; --d) {
    if (f.coeff(d).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << f.coeff(d).str() << ")";
    if (d > 0) os << "*t";
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

bool same_value(const FieldElement& x, const FieldElement& y) {
  const FieldDescriptor k = common_field(x.field(), y.field());
  return x.promote(k) == y.promote(k);
}

using CircleKey = std::array<FieldElement, 3>;

// The eight circles of the i-th family at t = 0, labelled by solution index.
std::array<CircleKey, 8> fiber_at_zero(const Configuration& cfg, const Radii& radii, int i, CenterTerms mode) {
  const FieldElement zero = FieldElement::zero(radii.field);
  FieldDescriptor tower = radii.field;
  std::vector<std::pair<FieldElement, FieldElement>> roots;  // discriminant, chosen square root
  std::array<CircleKey, 8> out;
  const auto& classes = sign_classes();
  for (std::size_t k = 0; k < 4; ++k) {
    const FamilyTerms terms = family_terms(cfg, radii, classes[k], i, mode);
    const QuadraticPoly f = assemble(cfg, terms).at(zero);
    if (f.a.is_zero()) {
      throw MathError(ErrorKind::DegenerateMerge, "leading coefficient of the t = 0 quadratic vanishes; perturb the configuration");
    }
    const FieldElement disc = f.discriminant();
    if (disc.is_zero()) {
      throw MathError(ErrorKind::DegenerateMerge, "t = 0 roots coincide for sign class " + std::to_string(k + 1) +
                                                      "; perturb the configuration");
    }
    std::optional<FieldElement> sq;
    for (auto& [d, r] : roots) {
      if (same_value(d, disc)) sq = r;
    }
    if (!sq) {
      const TowerRoot tr = sqrt_in_tower(tower, disc, "w" + std::to_string(k + 1));
      tower = tr.field;
      sq = tr.root;
      roots.emplace_back(disc, tr.root);
    }
    const FieldElement A1 = terms.A1.evaluate(zero), B1 = terms.B1.evaluate(zero);
    const FieldElement A2 = terms.A2.evaluate(zero), B2 = terms.B2.evaluate(zero);
    for (int root = 0; root < 2; ++root) {
      const FieldElement rho = (-f.b + (root == 0 ? *sq : -*sq)) / (FieldElement(2) * f.a);
      const FieldElement alpha = A1 * rho + A2;
      const FieldElement beta = B1 * rho + B2;
      out[2 * k + static_cast<std::size_t>(root)] = {FieldElement(-2) * alpha, FieldElement(-2) * beta,
                                                      alpha * alpha + beta * beta - rho * rho};
    }
  }
  for (auto& key : out) {
    for (auto& x : key) x = x.promote(common_field(x.field(), tower));
  }
  return out;
}

bool same_circle(const CircleKey& x, const CircleKey& y) {
  for (std::size_t j = 0; j < 3; ++j) {
    if (!same_value(x[j], y[j])) return false;
  }
  return true;
}

}  // namespace

QuadraticPoly FamilyPoly::at(const FieldElement& t) const { return {a.evaluate(t), b.evaluate(t), c.evaluate(t)}; }

TPoly FamilyPoly::discriminant() const { return b * b - TPoly(std::vector<FieldElement>{FieldElement(4)}) * a * c; }

FamilyPoly family_poly(const Configuration& cfg, const Radii& radii, const SignVector& s, int i, CenterTerms mode) {
  return assemble(cfg, family_terms(cfg, radii, s, i, mode));
}

int solution_index(int sign_class, int root_index) { return 2 * sign_class + root_index + 1; }

ThetaMatrix ThetaMatrix::identity() {
  ThetaMatrix t;
  for (std::size_t n = 0; n < 8; ++n) t.m[n][n] = 1;
  return t;
}

ThetaMatrix ThetaMatrix::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  ThetaMatrix t;
  for (auto [x, y] : pairs) {
    t.m[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] = 1;
    t.m[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)] = 1;
  }
  return t;
}

int ThetaMatrix::image(int n) const {
  const auto& row = m[static_cast<std::size_t>(n - 1)];
  int hit = 0;
  for (std::size_t j = 0; j < 8; ++j) {
    if (row[j] == 0) continue;
    if (hit != 0 || row[j] != 1) return 0;
    hit = static_cast<int>(j) + 1;
  }
  return hit;
}

bool ThetaMatrix::is_permutation() const {
  std::array<int, 8> col{};
  for (int n = 1; n <= 8; ++n) {
    const int j = image(n);
    if (j == 0) return false;
    ++col[static_cast<std::size_t>(j - 1)];
  }
  return std::all_of(col.begin(), col.end(), [](int c) { return c == 1; });
}

bool ThetaMatrix::symmetric() const {
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      if (m[i][j] != m[j][i]) return false;
    }
  }
  return true;
}

bool ThetaMatrix::involution() const { return *this * *this == identity(); }

bool ThetaMatrix::fixed_point_free() const {
  for (std::size_t n = 0; n < 8; ++n) {
    if (m[n][n] != 0) return false;
  }
  return true;
}

ThetaMatrix ThetaMatrix::operator*(const ThetaMatrix& o) const {
  ThetaMatrix out;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      int acc = 0;
      for (std::size_t k = 0; k < 8; ++k) acc += m[i][k] * o.m[k][j];
      out.m[i][j] = acc;
    }
  }
  return out;
}

std::string ThetaMatrix::str() const {
  std::ostringstream os;
  for (auto& row : m) {
    os << "[";
    for (std::size_t j = 0; j < 8; ++j) os << (j ? " " : "") << row[j];
    os << "]\n";
  }
  return os.str();
}

nlohmann::json ThetaMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (auto& row : m) {
    std::string bits;
    for (int v : row) bits += static_cast<char>('0' + v);
    rows.push_back(bits);
  }
  return rows;
}

const std::array<ThetaMatrix, 3>& reference_thetas() {
  static const std::array<ThetaMatrix, 3> t{
      ThetaMatrix::from_pairs({{1, 8}, {2, 7}, {3, 6}, {4, 5}}),
      ThetaMatrix::from_pairs({{1, 5}, {2, 6}, {3, 7}, {4, 8}}),
      ThetaMatrix::from_pairs({{1, 3}, {2, 4}, {5, 7}, {6, 8}}),
  };
  return t;
}

const ThetaMatrix& reference_inversive() {
  static const ThetaMatrix t = ThetaMatrix::from_pairs({{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  return t;
}

ThetaMatrix theta(const Configuration& cfg, const Radii& radii, int i, CenterTerms mode) {
  const ConfigStatus st = cfg.check();
  if (st.kind == ConfigStatus::Kind::CollinearCenters) {
    throw MathError(ErrorKind::CollinearCenters, "centers are collinear (Delta = 0)");
  }
  if (!st.ok()) throw MathError(ErrorKind::TangentPair, st.str());
  const auto w = fiber_at_zero(cfg, radii, i, mode);
  ThetaMatrix t;
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) t.m[a][b] = (a != b && same_circle(w[a], w[b])) ? 1 : 0;
  }
  if (!t.is_permutation()) {
    throw MathError(ErrorKind::DegenerateMerge, "t = 0 circles do not merge in pairs; perturb the configuration");
  }
  return t;
}

std::vector<std::pair<int, int>> inversive_pairs() { return {{1, 2}, {3, 4}, {5, 6}, {7, 8}}; }

ThetaMatrix inversive_matrix() { return ThetaMatrix::from_pairs(inversive_pairs()); }

nlohmann::json CubeReport::to_json() const {
  return {{"no_fixed_points", no_fixed_points},
          {"distinct_images", distinct_images},
          {"commute", commute},
          {"product_fixed_point_free", product_fixed_point_free},
          {"connected", connected},
          {"trivalent", trivalent},
          {"bipartite", bipartite},
          {"product_is_inversive", product_is_inversive},
          {"ok", ok()},
          {"failures", failures}};
}

CubeReport cube_check(const std::array<ThetaMatrix, 3>& thetas) {
  CubeReport rep;
  rep.no_fixed_points = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& t = thetas[i];
    if (!t.is_permutation() || !t.involution() || !t.fixed_point_free()) {
      rep.no_fixed_points = false;
      rep.failures.push_back("(i) theta_" + std::to_string(i + 1) + " is not a fixed-point-free involution");
    }
  }
  rep.distinct_images = true;
  for (int n = 1; n <= 8; ++n) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (thetas[i].image(n) == thetas[j].image(n)) rep.distinct_images = false;
      }
    }
  }
  if (!rep.distinct_images) rep.failures.push_back("(ii) two involutions agree on some solution");
  rep.commute = true;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!(thetas[i] * thetas[j] == thetas[j] * thetas[i])) rep.commute = false;
    }
  }
  if (!rep.commute) rep.failures.push_back("(iii) involutions do not commute");
  const ThetaMatrix prod = thetas[0] * thetas[1] * thetas[2];
  rep.product_fixed_point_free = prod.is_permutation() && prod.fixed_point_free();
  if (!rep.product_fixed_point_free) rep.failures.push_back("(iv) theta_1 theta_2 theta_3 fixes a solution");
  rep.product_is_inversive = prod == inversive_matrix();
  if (!rep.product_is_inversive) rep.failures.push_back("theta_1 theta_2 theta_3 differs from inversive duality");

  std::array<std::set<int>, 8> adj;
  for (auto& t : thetas) {
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = 0; b < 8; ++b) {
        if (t.m[a][b] != 0 && a != b) adj[a].insert(static_cast<int>(b));
      }
    }
  }
  rep.trivalent = std::all_of(adj.begin(), adj.end(), [](const std::set<int>& s) { return s.size() == 3; });
  std::array<int, 8> colour;
  colour.fill(-1);
  colour[0] = 0;
  std::queue<int> q;
  q.push(0);
  rep.bipartite = true;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u : adj[static_cast<std::size_t>(v)]) {
      auto& cu = colour[static_cast<std::size_t>(u)];
      if (cu < 0) {
        cu = 1 - colour[static_cast<std::size_t>(v)];
        q.push(u);
      } else if (cu == colour[static_cast<std::size_t>(v)]) {
        rep.bipartite = false;
      }
    }
  }
  rep.connected = std::all_of(colour.begin(), colour.end(), [](int c) { return c >= 0; });
  if (!rep.connected) rep.failures.push_back("graph is not connected");
  if (!rep.trivalent) rep.failures.push_back("graph is not trivalent");
  if (!rep.bipartite) rep.failures.push_back("graph is not bipartite");
  return rep;
}

std::string check_state_name(CheckState s) {
  switch (s) {
    case CheckState::Pass:
      return "PASS";
    case CheckState::Fail:
      return "FAIL";
    case CheckState::HypothesisNotMet:
      return "HYPOTHESIS_NOT_MET";
  }
  return "?";
}

nlohmann::json SumCheck::to_json() const {
  nlohmann::json j{{"indices", indices},
                   {"state", check_state_name(state)},
                   {"reason", reason},
                   {"straddles_residue_fields", straddles_residue_fields}};
  j["sum"] = sum ? sum->to_json() : nlohmann::json(nullptr);
  j["expected"] = expected ? expected->to_json() : nlohmann::json(nullptr);
  return j;
}

namespace {

// Closed points of the split-radii solution set with their indices and residue fields.
struct ClosedPoints {
  std::string gate;  // non-empty when per-point indices are unavailable
  std::array<int, 8> point_of{};  // solution index - 1 -> closed point id
  std::vector<std::optional<FormClass>> beta;
  std::vector<std::optional<FieldElement>> radicand;  // residue field k(sqrt d); empty for k
};

ClosedPoints closed_points(const Configuration& cfg, const Radii& radii) {
  ClosedPoints cp;
  if (cfg.point_count() != 0) {
    cp.gate = "inputs must be three circles";
    return cp;
  }
  if (!radii.split) {
    cp.gate = "radii are not split: per-point indices unavailable";
    return cp;
  }
  const auto sols = solve_all(cfg, radii);
  const auto objects = hypersurfaces(cfg);
  for (std::size_t n = 0; n < sols.size(); ++n) {
    const auto& s = sols[n];
    if (s.adjoined && s.root_index == 1) {
      cp.point_of[n] = cp.point_of[n - 1];
      continue;
    }
    cp.point_of[n] = static_cast<int>(cp.beta.size());
    const FieldElement v = vol(objects, s.circle);
    cp.beta.push_back(v.is_zero() ? std::nullopt : std::optional<FormClass>(beta(s, v)));
    cp.radicand.push_back(s.adjoined ? std::optional<FieldElement>(s.field.radicand(s.field.depth() - 1))
                                     : std::nullopt);
  }
  return cp;
}

bool same_residue_field(const std::optional<FieldElement>& x, const std::optional<FieldElement>& y) {
  if (!x || !y) return !x && !y;
  return is_square(*x / *y).has_value();
}

SumCheck sum_over(const Configuration& cfg, const ClosedPoints& cp, std::vector<int> indices, bool gate_fields) {
  SumCheck c;
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  c.indices = indices;
  if (!cp.gate.empty()) {
    c.reason = cp.gate;
    return c;
  }
  std::set<int> points;
  for (int n : indices) points.insert(cp.point_of[static_cast<std::size_t>(n - 1)]);
  const auto& first = cp.radicand[static_cast<std::size_t>(*points.begin())];
  for (int pt : points) {
    const auto idx = static_cast<std::size_t>(pt);
    if (!cp.beta[idx]) {
      c.reason = "local index vanishes at a solution";
      return c;
    }
    if (!same_residue_field(first, cp.radicand[idx])) {
      c.straddles_residue_fields = true;
      if (gate_fields) {
        c.reason = "solutions straddle non-isomorphic residue fields";
        return c;
      }
    }
  }
  std::optional<FormClass> total;
  for (int pt : points) {
    const FormClass& b = *cp.beta[static_cast<std::size_t>(pt)];
    total = total ? add_forms(*total, b) : b;
  }
  c.sum = total;
  if (total->rank % 2 != 0) {
    c.state = CheckState::Fail;
    c.reason = "odd rank";
    return c;
  }
  c.expected = hyperbolic(total->rank / 2, cfg.base.prime());
  if (!total->complete()) {
    c.reason = "factoring budget exhausted while classifying";
    return c;
  }
  c.state = *total == *c.expected ? CheckState::Pass : CheckState::Fail;
  if (points.size() < indices.size()) c.reason = "conjugate solutions counted once as a closed point";
  return c;
}

}  // namespace

std::vector<SumCheck> inversive_sum_check(const Configuration& cfg, const Radii& radii) {
  const ClosedPoints cp = closed_points(cfg, radii);
  std::vector<SumCheck> out;
  for (auto [q, qq] : inversive_pairs()) out.push_back(sum_over(cfg, cp, {q, qq}, true));
  return out;
}

std::vector<SumCheck> degen_dual_sum_check(const Configuration& cfg, const Radii& radii, int i,
                                           const ThetaMatrix& theta_i) {
  if (!theta_i.is_permutation()) throw std::invalid_argument("theta_" + std::to_string(i) + " is not a permutation");
  const ClosedPoints cp = closed_points(cfg, radii);
  // The t = 0 double points of each quadruple are the two roots of one quadratic.
  std::string merge_gate;
  std::optional<std::array<CircleKey, 8>> fiber;
  try {
    fiber = fiber_at_zero(cfg, radii, i, CenterTerms::Fixed);
  } catch (const MathError& e) {
    merge_gate = std::string("t = 0 fiber is not four distinct double points: ") + e.what();
  }
  std::vector<SumCheck> out;
  std::set<std::vector<int>> seen;
  for (auto [q, qq] : inversive_pairs()) {
    std::vector<int> quad{q, qq, theta_i.image(q), theta_i.image(qq)};
    std::sort(quad.begin(), quad.end());
    if (!seen.insert(quad).second) continue;
    if (!merge_gate.empty()) {
      SumCheck c;
      c.indices = quad;
      c.reason = merge_gate;
      out.push_back(std::move(c));
      continue;
    }
    const auto& d = (*fiber)[static_cast<std::size_t>(q - 1)];
    const auto& dd = (*fiber)[static_cast<std::size_t>(qq - 1)];
    auto rational = [](const CircleKey& w) {
      return std::all_of(w.begin(), w.end(), [](const FieldElement& x) { return x.in_base(); });
    };
    if (rational(d) != rational(dd)) {
      SumCheck c;
      c.indices = quad;
      c.reason = "t = 0 double points have non-isomorphic residue fields";
      out.push_back(std::move(c));
      continue;
    }
    out.push_back(sum_over(cfg, cp, quad, false));
  }
  return out;
}

nlohmann::json RamificationEntry::to_json() const {
  nlohmann::json j{{"sign", sign}, {"discriminant", tpoly_str(discriminant)}, {"base_coefficients", base_coefficients}};
  nlohmann::json rs = nlohmann::json::array();
  for (auto& r : roots) rs.push_back(r.str());
  j["roots"] = rs;
  j["remaining_factor_degrees"] = remaining_degrees;
  j["vanishes_at_zero"] = vanishes_at_zero;
  nlohmann::json ev = nlohmann::json::array();
  for (auto& [t, v] : evaluations) ev.push_back({{"t", t}, {"vanishes", v}});
  j["evaluations"] = ev;
  return j;
}

nlohmann::json RamificationReport::to_json() const {
  nlohmann::json es = nlohmann::json::array();
  for (auto& e : entries) es.push_back(e.to_json());
  return {{"i", i}, {"entries", es}, {"fiber_zero_all_double", fiber_zero_all_double}};
}

RamificationReport ramification_scan(const Configuration& cfg, const Radii& radii, int i,
                                     const std::vector<FieldElement>& t_values) {
  if (delta(cfg).is_zero()) throw MathError(ErrorKind::CollinearCenters, "centers are collinear (Delta = 0)");
  RamificationReport rep;
  rep.i = i;
  for (const SignVector& s : sign_classes()) {
    RamificationEntry e;
    e.sign = s;
    e.discriminant = family_poly(cfg, radii, s, i).discriminant();
    e.base_coefficients = true;
    std::vector<Scalar> coeffs;
    for (int d = 0; d <= e.discriminant.degree(); ++d) {
      const FieldElement& c = e.discriminant.coeff(d);
      if (!c.in_base()) e.base_coefficients = false;
      coeffs.push_back(c.in_base() ? c.base_value() : Scalar());
    }
    if (e.base_coefficients && e.discriminant.degree() > 0) {
      const UPoly f(coeffs);
      int found = 0;
      for (auto& [root, mult] : base_roots(f)) {
        e.roots.push_back(root);
        found += mult;
      }
      if (f.degree() > found) e.remaining_degrees.push_back(f.degree() - found);
    }
    const FieldElement zero = FieldElement::zero(radii.field);
    e.vanishes_at_zero = e.discriminant.evaluate(zero).is_zero();
    for (auto& t : t_values) e.evaluations.emplace_back(t.str(), e.discriminant.evaluate(t).is_zero());
    rep.entries.push_back(std::move(e));
  }
  try {
    const auto w = fiber_at_zero(cfg, radii, i, CenterTerms::Fixed);
    int doubled = 0;
    for (std::size_t a = 0; a < 8; ++a) {
      int same = 0;
      for (std::size_t b = 0; b < 8; ++b) same += same_circle(w[a], w[b]) ? 1 : 0;
      doubled += same == 2 ? 1 : 0;
    }
    rep.fiber_zero_all_double = doubled == 8;
  } catch (const MathError&) {
    rep.fiber_zero_all_double = false;
  }
  return rep;
}

}  // namespace apollo
