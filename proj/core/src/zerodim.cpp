#include "apollonius/zerodim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "apollonius/errors.hpp"
#include "apollonius/linalg.hpp"
#include "apollonius/moduli.hpp"
#include "apollonius/numtheory.hpp"

namespace apollo {

namespace {

constexpr int kAffineVars = 3;

Scalar zero_of(std::int64_t p) { return p == 0 ? Scalar() : Scalar::mod(0, p); }
Scalar one_of(std::int64_t p) { return p == 0 ? Scalar(1L) : Scalar::mod(1, p); }

Scalar base_scalar(const FieldElement& e) {
  if (!e.in_base()) throw MathError(ErrorKind::FieldMismatch, "equation data must lie in the base field");
  return e.base_value();
}

Matrix zeros(std::size_t r, std::size_t c, std::int64_t p) { return Matrix(r, Vec(c, zero_of(p))); }

Matrix identity(std::size_t n, std::int64_t p) {
  Matrix m = zeros(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = one_of(p);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b, std::int64_t p) {
  Matrix out = zeros(a.size(), b.empty() ? 0 : b[0].size(), p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Vec matvec(const Matrix& a, const Vec& v, std::int64_t p) {
  Vec out(a.size(), zero_of(p));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

Scalar matrix_trace(const Matrix& m, std::int64_t p) {
  Scalar t = zero_of(p);
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

Scalar bilinear(const Vec& x, const Matrix& g, const Vec& y, std::int64_t p) {
  const Vec gy = matvec(g, y, p);
  Scalar acc = zero_of(p);
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * gy[i];
  return acc;
}

// f(M) by Horner.
Matrix evaluate_at(const UPoly& f, const Matrix& m, std::int64_t p) {
  const std::size_t n = m.size();
  Matrix acc = zeros(n, n, p);
  for (int k = f.degree(); k >= 0; --k) {
    acc = matmul(acc, m, p);
    const Scalar c = f.coeff(k).in_field(p);
    for (std::size_t i = 0; i < n; ++i) acc[i][i] += c;
  }
  return acc;
}

bool has_pure_powers(const std::vector<Poly>& gb) {
  for (int v = 0; v < kAffineVars; ++v) {
    bool found = false;
    for (auto& g : gb) {
      const Exponent& e = g.leading_exponent();
      bool pure = e[static_cast<std::size_t>(v)] > 0;
      for (int w = 0; w < kMaxVars && pure; ++w) {
        if (w != v && e[static_cast<std::size_t>(w)] != 0) pure = false;
      }
      if (pure) found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool is_constant_nonzero(const Poly& g) { return !g.is_zero() && total_degree(g.leading_exponent()) == 0; }

// Smallest d with v_d in the span of v_0..v_{d-1}; returns the monic relation.
template <typename Next>
UPoly krylov_relation(std::size_t max_degree, std::int64_t p, Next next) {
  std::vector<Vec> vs;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    vs.push_back(next(d));
    linalg::Mat<Scalar> m(vs[0].size(), Vec(vs.size(), zero_of(p)));
    for (std::size_t c = 0; c < vs.size(); ++c) {
      for (std::size_t r = 0; r < vs[c].size(); ++r) m[r][c] = vs[c][r];
    }
    auto ker = linalg::kernel(m, zero_of(p), one_of(p));
    if (ker.empty()) continue;
    Vec rel = ker[0];
    const Scalar lead = rel.back();
    for (auto& x : rel) x = x / lead;
    return UPoly(rel);
  }
  throw std::logic_error("minimal polynomial degree exceeds bound");
}

// True when every c_k - pt[k] acts nilpotently on the block, i.e. the block is supported at pt.
bool is_local_point(const QuotientAlgebra& A, const AlgebraBlock& blk, const std::array<Scalar, 3>& pt,
                    std::int64_t p) {
  const std::size_t n = A.dim();
  for (std::size_t k = 0; k < 3; ++k) {
    Matrix shifted = A.mult[k];
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= pt[k];
    Matrix power = blk.idempotent;
    for (std::size_t e = 0; e < blk.rank; ++e) power = matmul(shifted, power, p);
    for (auto& row : power) {
      for (auto& x : row) {
        if (!x.is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::array<Poly, 3> equations(const Configuration& cfg) {
  const std::int64_t p = cfg.base.prime();
  std::array<Poly, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const InputObject& o = cfg.objects[i];
    std::array<Poly, 4> mono{Poly::constant(one_of(p)), Poly::variable(0, p), Poly::variable(1, p),
                             Poly::variable(2, p)};
    Poly f(p);
    if (o.is_point()) {
      const Hyperplane h = plane_through(o.a, o.b);
      for (std::size_t k = 0; k < 4; ++k) f += mono[k].scaled(base_scalar(h.coeffs[k]));
    } else {
      const QuadricCone q = cone_of(o.as_circle());
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) f += (mono[a] * mono[b]).scaled(base_scalar(q.gram[a][b]));
      }
    }
    out[i] = f;
  }
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& gb) {
  Poly rem = f;
  Poly out(f.prime());
  while (!rem.is_zero()) {
    const Exponent lt = rem.leading_exponent();
    const Scalar lc = rem.leading_coeff();
    bool reduced = false;
    for (auto& g : gb) {
      if (divides(g.leading_exponent(), lt)) {
        rem -= g.shifted(lt - g.leading_exponent(), lc / g.leading_coeff());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.add_term(lt, lc);
      rem.add_term(lt, -lc);
    }
  }
  return out;
}

std::vector<Poly> groebner_basis(std::vector<Poly> gens) {
  std::vector<Poly> g;
  for (auto& f : gens) {
    if (!f.is_zero()) g.push_back(f.monic());
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    const Exponent& li = g[i].leading_exponent();
    const Exponent& lj = g[j].leading_exponent();
    const Exponent l = lcm(li, lj);
    if (l == li + lj) continue;  // coprime leading monomials
    const Scalar one = one_of(g[i].prime());
    Poly s = g[i].shifted(l - li, one) - g[j].shifted(l - lj, one);
    Poly r = normal_form(s, g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  // Minimalize, then interreduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const bool div = divides(g[j].leading_exponent(), g[i].leading_exponent());
      if (div && (g[j].leading_exponent() != g[i].leading_exponent() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Exponent lt = minimal[i].leading_exponent();
    Poly tail = minimal[i];
    tail.add_term(lt, -tail.leading_coeff());
    Poly r = normal_form(tail, others);
    r.add_term(lt, one_of(minimal[i].prime()));
    reduced.push_back(r);
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return DegRevLexGreater{}(a.leading_exponent(), b.leading_exponent());
  });
  return reduced;
}

Vec QuotientAlgebra::coords(const Poly& f) const {
  Vec out(basis.size(), zero_of(prime));
  const Poly nf = normal_form(f, gb);
  for (auto& [e, c] : nf.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), e,
                               [](const Exponent& a, const Exponent& b) { return DegRevLexGreater{}(b, a); });
    if (it == basis.end() || *it != e) throw std::logic_error("normal form left a non-standard monomial");
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

Matrix QuotientAlgebra::matrix_of(const Poly& f) const {
  const std::size_t n = dim();
  Matrix m = zeros(n, n, prime);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec col = coords(f * Poly::monomial(basis[j], one_of(prime)));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

Matrix QuotientAlgebra::matrix_of(const Vec& element) const {
  const std::size_t n = dim();
  Matrix m = zeros(n, n, prime);
  for (std::size_t l = 0; l < n; ++l) {
    if (element[l].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] += element[l] * monomial_mult[l][i][j];
    }
  }
  return m;
}

Vec QuotientAlgebra::one() const {
  Vec v(dim(), zero_of(prime));
  v[0] = one_of(prime);
  return v;
}

Scalar QuotientAlgebra::trace(const Vec& element) const {
  Scalar t = zero_of(prime);
  for (std::size_t l = 0; l < element.size(); ++l) t += element[l] * tau[l];
  return t;
}

QuotientAlgebra build_algebra(const std::array<Poly, 3>& eqs) {
  QuotientAlgebra A;
  A.prime = eqs[0].prime();
  for (auto& f : eqs) {
    if (f.prime() != 0) A.prime = f.prime();
  }
  A.gb = groebner_basis({eqs[0], eqs[1], eqs[2]});
  for (auto& g : A.gb) {
    if (is_constant_nonzero(g)) throw MathError(ErrorKind::NotZeroDimensional, "the equations have no common zero");
  }
  if (!has_pure_powers(A.gb)) throw MathError(ErrorKind::NotZeroDimensional, "the zero set is not finite");

  std::vector<Poly> tops;
  for (auto& f : eqs) tops.push_back(f.homogeneous_part(f.degree()));
  if (!has_pure_powers(groebner_basis(tops))) {
    throw MathError(ErrorKind::SolutionsAtInfinity, "the equations have a common zero with c0 = 0");
  }

  std::set<Exponent> seen;
  std::vector<Exponent> stack{Exponent{}};
  while (!stack.empty()) {
    const Exponent e = stack.back();
    stack.pop_back();
    if (seen.count(e) != 0) continue;
    bool standard = true;
    for (auto& g : A.gb) {
      if (divides(g.leading_exponent(), e)) standard = false;
    }
    if (!standard) continue;
    seen.insert(e);
    for (int v = 0; v < kAffineVars; ++v) {
      Exponent n = e;
      ++n[static_cast<std::size_t>(v)];
      stack.push_back(n);
    }
  }
  A.basis.assign(seen.begin(), seen.end());
  std::sort(A.basis.begin(), A.basis.end(), [](const Exponent& a, const Exponent& b) { return DegRevLexGreater{}(b, a); });

  for (int k = 0; k < kAffineVars; ++k) A.mult[static_cast<std::size_t>(k)] = A.matrix_of(Poly::variable(k, A.prime));
  for (auto& b : A.basis) A.monomial_mult.push_back(A.matrix_of(Poly::monomial(b, one_of(A.prime))));
  for (auto& m : A.monomial_mult) A.tau.push_back(matrix_trace(m, A.prime));
  return A;
}

Poly jacobian(const std::array<Poly, 3>& eqs) {
  linalg::Mat<Poly> m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (int v = 0; v < kAffineVars; ++v) m[i].push_back(eqs[i].derivative(v));
  }
  return linalg::det3(m);
}

GramForm global_form(const QuotientAlgebra& A, const Poly& volpoly) {
  const std::size_t n = A.dim();
  const Matrix mj = A.matrix_of(volpoly);
  Vec w(n, zero_of(A.prime));  // w = tau^T M_J
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) w[j] += A.tau[l] * mj[l][j];
  }
  GramForm g;
  g.prime = A.prime;
  g.matrix = zeros(n, n, A.prime);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = zero_of(A.prime);
      for (std::size_t m = 0; m < n; ++m) acc += w[m] * A.monomial_mult[i][m][j];
      g.matrix[i][j] = acc;
    }
  }
  return g;
}

GramForm global_trace_form(const QuotientAlgebra& A, const Poly& volpoly) {
  GramForm g = global_form(A, volpoly);
  if (determinant(g.matrix).is_zero()) {
    throw MathError(ErrorKind::DegenerateForm, "trace form is degenerate (non-transverse configuration)");
  }
  return g;
}

Matrix bezoutian_matrix(const QuotientAlgebra& A, const std::array<Poly, 3>& eqs) {
  const std::int64_t p = A.prime;
  linalg::Mat<Poly> delta(3, std::vector<Poly>(3, Poly(p)));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Poly d(p);
      for (auto& [e, c] : eqs[i].terms()) {
        const int pw = e[j];
        if (pw == 0) continue;
        Exponent base{};
        for (std::size_t v = 0; v < static_cast<std::size_t>(kAffineVars); ++v) {
          if (v < j) base[v + kAffineVars] = e[v];
          if (v > j) base[v] = e[v];
        }
        for (int a = 0; a < pw; ++a) {
          Exponent t = base;
          t[j] = static_cast<std::uint8_t>(a);
          t[j + kAffineVars] = static_cast<std::uint8_t>(pw - 1 - a);
          d.add_term(t, c);
        }
      }
      delta[i][j] = d;
    }
  }
  const Poly bez = linalg::det3(delta);

  std::vector<Poly> both = A.gb;
  for (auto& g : A.gb) {
    Poly gy(p);
    for (auto& [e, c] : g.terms()) {
      Exponent t{};
      for (int v = 0; v < kAffineVars; ++v) t[static_cast<std::size_t>(v + kAffineVars)] = e[static_cast<std::size_t>(v)];
      gy.add_term(t, c);
    }
    both.push_back(gy);
  }
  const Poly nf = normal_form(bez, both);

  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < A.basis.size(); ++i) index[A.basis[i]] = i;
  const std::size_t n = A.dim();
  Matrix b = zeros(n, n, p);
  for (auto& [e, c] : nf.terms()) {
    Exponent ex{}, ey{};
    for (std::size_t v = 0; v < static_cast<std::size_t>(kAffineVars); ++v) {
      ex[v] = e[v];
      ey[v] = e[v + kAffineVars];
    }
    b.at(index.at(ex)).at(index.at(ey)) = c;
  }
  return b;
}

GramForm residue_form(const QuotientAlgebra& A, const std::array<Poly, 3>& eqs) {
  const Matrix b = bezoutian_matrix(A, eqs);
  const std::size_t n = A.dim();
  linalg::Mat<Scalar> aug = b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? one_of(A.prime) : zero_of(A.prime));
  }
  const auto piv = linalg::rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) {
    throw MathError(ErrorKind::DegenerateForm, "Bezoutian matrix is singular");
  }
  GramForm g;
  g.prime = A.prime;
  g.matrix = zeros(n, n, A.prime);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.matrix[i][j] = aug[i][n + j];
  }
  if (!g.symmetric()) throw std::logic_error("residue pairing is not symmetric");
  return g;
}

UPoly minimal_polynomial(const Matrix& m) {
  const std::int64_t p = m.empty() ? 0 : m[0][0].prime();
  const std::size_t n = m.size();
  Matrix power = identity(n, p);
  return krylov_relation(n, p, [&](std::size_t d) {
    if (d > 0) power = matmul(power, m, p);
    Vec v;
    for (auto& row : power) v.insert(v.end(), row.begin(), row.end());
    return v;
  });
}

UPoly minimal_polynomial(const FieldElement& a) {
  const std::int64_t p = a.field().prime();
  FieldElement power = FieldElement::one(a.field());
  return krylov_relation(a.field().degree(), p, [&](std::size_t d) {
    if (d > 0) power *= a;
    return power.coords();
  });
}

std::array<FieldElement, 3> affine_point(const Circle& c) {
  if (c.is_degenerate()) throw MathError(ErrorKind::DegenerateSolution, "circle at infinity");
  return {c[1], c[2], c[3]};
}

nlohmann::json AlgebraBlock::to_json() const {
  nlohmann::json j{{"rank", rank}, {"factor", upoly_str(factor)}};
  j["formclass"] = cls ? cls->to_json() : nlohmann::json(nullptr);
  if (point) j["point"] = {(*point)[0].str(), (*point)[1].str(), (*point)[2].str()};
  return j;
}

SplitReport idempotent_split(const QuotientAlgebra& A, const GramForm& pairing,
                             const std::vector<std::array<FieldElement, 3>>& hints) {
  const std::int64_t p = A.prime;
  const std::size_t n = A.dim();
  SplitReport rep;
  Matrix ml;
  std::vector<std::array<int, 3>> candidates{{1, 2, 4}, {1, 3, 9}};
  for (int a = 4; a <= 12; ++a) candidates.push_back({1, a, a * a});
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) candidates.push_back({1, a, b});
  }
  // Without a cyclic form, prefer the one separating the most geometric points.
  int best = -1;
  for (const std::array<int, 3>& sep : candidates) {
    Matrix cand = zeros(n, n, p);
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) cand[i][j] += Scalar(sep[k]) * A.mult[k][i][j];
      }
    }
    UPoly mu = minimal_polynomial(cand);
    const bool ok = static_cast<std::size_t>(mu.degree()) == n;
    const int distinct = divmod(mu, gcd(mu, mu.derivative())).first.degree();
    if (distinct > best || ok) {
      best = distinct;
      rep.separating = sep;
      rep.separating_ok = ok;
      rep.minpoly = mu;
      ml = cand;
    }
    if (ok) break;
  }

  struct Factor {
    UPoly poly;
    std::optional<Scalar> root;
  };
  std::vector<Factor> factors;
  UPoly rest = rep.minpoly;
  for (auto& [root, mult] : base_roots(rest)) {
    UPoly f = UPoly::constant(one_of(p));
    for (int k = 0; k < mult; ++k) f = f * linear_factor(root);
    rest = divmod(rest, f).first;
    factors.push_back({f, root});
  }
  for (auto& h : hints) {
    if (rest.degree() < 1) break;
    const FieldElement lam = FieldElement(rep.separating[0]) * h[0] + FieldElement(rep.separating[1]) * h[1] +
                             FieldElement(rep.separating[2]) * h[2];
    const UPoly irr = minimal_polynomial(lam);
    if (irr.degree() < 2) continue;
    UPoly f = UPoly::constant(one_of(p));
    while (rest.degree() >= irr.degree()) {
      auto [q, r] = divmod(rest, irr);
      if (!r.is_zero()) break;
      rest = q;
      f = f * irr;
    }
    if (f.degree() > 0) factors.push_back({f, std::nullopt});
  }
  if (rest.degree() > 0) factors.push_back({monic(rest), std::nullopt});

  for (auto& fac : factors) {
    AlgebraBlock blk;
    blk.factor = fac.poly;
    const UPoly cof = divmod(rep.minpoly, fac.poly).first;
    const auto [g, s, t] = ext_gcd(cof, fac.poly);
    const UPoly e = divmod(s * cof, rep.minpoly).second;
    blk.idempotent = evaluate_at(e, ml, p);
    blk.rank = matrix_rank(blk.idempotent);

    linalg::Mat<Scalar> em = blk.idempotent;
    for (auto c : linalg::rref(em)) {
      Vec col(n, zero_of(p));
      for (std::size_t r = 0; r < n; ++r) col[r] = blk.idempotent[r][c];
      blk.basis.push_back(col);
    }
    blk.gram.prime = p;
    blk.gram.matrix = zeros(blk.basis.size(), blk.basis.size(), p);
    for (std::size_t i = 0; i < blk.basis.size(); ++i) {
      for (std::size_t j = 0; j < blk.basis.size(); ++j) {
        blk.gram.matrix[i][j] = bilinear(blk.basis[i], pairing.matrix, blk.basis[j], p);
      }
    }
    if (!determinant(blk.gram.matrix).is_zero()) blk.cls = classify(blk.gram);

    if (fac.root) {
      std::array<Scalar, 3> pt;
      for (std::size_t k = 0; k < 3; ++k) {
        const Matrix me = matmul(A.mult[k], blk.idempotent, p);
        const Scalar r(static_cast<long>(blk.rank));
        if (!r.in_field(p).is_zero()) {
          pt[k] = matrix_trace(me, p) / r.in_field(p);
          continue;
        }
        // Residue characteristic divides the block rank: find the eigenvalue directly.
        for (std::int64_t m = 0; m < p; ++m) {
          Matrix shifted = me;
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) shifted[i][j] -= Scalar::mod(m, p) * blk.idempotent[i][j];
          }
          if (matrix_rank(shifted) < blk.rank) {
            pt[k] = Scalar::mod(m, p);
            break;
          }
        }
      }
      if (is_local_point(A, blk, pt, p)) blk.point = pt;
    }
    rep.blocks.push_back(std::move(blk));
  }
  return rep;
}

std::vector<std::array<Scalar, 3>> ZeroDimReport::rational_points() const {
  std::vector<std::array<Scalar, 3>> out;
  for (auto& b : split.blocks) {
    if (b.point) out.push_back(*b.point);
  }
  return out;
}

nlohmann::json ZeroDimReport::to_json() const {
  nlohmann::json j;
  j["dim"] = dim;
  j["etale"] = etale;
  j["pairing"] = pairing;
  j["gram"] = gram.to_json();
  j["formclass"] = formclass.to_json();
  j["crosscheck_ok"] = crosscheck_ok;
  j["separating_form"] = split.separating;
  j["minimal_polynomial"] = upoly_str(split.minpoly);
  nlohmann::json blocks = nlohmann::json::array();
  for (auto& b : split.blocks) blocks.push_back(b.to_json());
  j["blocks"] = blocks;
  return j;
}

ZeroDimReport analyze(const Configuration& cfg, const std::vector<std::array<FieldElement, 3>>& hints) {
  const auto eqs = equations(cfg);
  const QuotientAlgebra A = build_algebra(eqs);
  ZeroDimReport rep;
  rep.dim = A.dim();
  GramForm trace = global_form(A, jacobian(eqs));
  rep.etale = !determinant(trace.matrix).is_zero();
  if (rep.etale) {
    rep.gram = std::move(trace);
    rep.pairing = "trace";
  } else {
    rep.gram = residue_form(A, eqs);
    rep.pairing = "residue";
  }
  rep.split = idempotent_split(A, rep.gram, hints);

  bool blocks_ok = true;
  std::optional<FormClass> sum;
  for (auto& b : rep.split.blocks) {
    if (!b.cls) {
      blocks_ok = false;
      break;
    }
    sum = sum ? add_forms(*sum, *b.cls) : *b.cls;
  }
  rep.formclass = (blocks_ok && sum) ? *sum : classify(rep.gram);

  // Independent checks on the undecomposed Gram matrix.
  const std::int64_t p = A.prime;
  bool ok = matrix_rank(rep.gram.matrix) == static_cast<std::size_t>(rep.formclass.rank);
  const Scalar det = determinant(rep.gram.matrix);
  if (p == 0) {
    int sig = 0;
    for (auto& d : diagonalize(rep.gram)) sig += d.is_zero() ? 0 : d.sign();
    ok = ok && rep.formclass.signature == sig;
    const mpq_class ratio = det.q() * mpq_class(rep.formclass.disc);
    ok = ok && ratio > 0 && nt::exact_sqrt(ratio.get_num()) && nt::exact_sqrt(ratio.get_den());
  } else {
    const Scalar ratio = det * Scalar::mod(rep.formclass.disc, p);
    ok = ok && ratio.sqrt().has_value();
  }
  rep.crosscheck_ok = ok;
  return rep;
}

}  // namespace apollo
