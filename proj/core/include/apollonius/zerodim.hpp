#pragma once

#include <array>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "apollonius/polynomial.hpp"
#include "apollonius/quadform.hpp"
#include "apollonius/solver.hpp"

namespace apollo {

// Affine equations (c0 = 1) in c1, c2, c3: a cone per circle, a plane per point.
std::array<Poly, 3> equations(const Configuration& cfg);

// Reduced Groebner basis, degree reverse lexicographic.
std::vector<Poly> groebner_basis(std::vector<Poly> gens);
Poly normal_form(const Poly& f, const std::vector<Poly>& gb);

using Vec = std::vector<Scalar>;

// k[c1,c2,c3] / (f1, f2, f3) with a standard-monomial basis (basis[0] = 1).
struct QuotientAlgebra {
  std::int64_t prime = 0;
  std::vector<Poly> gb;
  std::vector<Exponent> basis;
  std::array<Matrix, 3> mult;  // column j = coordinates of c_k * basis[j]
  std::vector<Matrix> monomial_mult;  // multiplication by basis[l]
  Vec tau;                            // tau[l] = Tr(multiplication by basis[l])

  std::size_t dim() const { return basis.size(); }
  Vec coords(const Poly& f) const;
  Matrix matrix_of(const Poly& f) const;
  Matrix matrix_of(const Vec& element) const;
  Vec one() const;
  Scalar trace(const Vec& element) const;
};

QuotientAlgebra build_algebra(const std::array<Poly, 3>& eqs);

// Determinant of the Jacobian matrix of the three equations.
Poly jacobian(const std::array<Poly, 3>& eqs);

// Gram matrix of (x, y) -> Tr_{A/k}(J x y) on the monomial basis (no nondegeneracy check).
GramForm global_form(const QuotientAlgebra& A, const Poly& volpoly);
// As above; throws DegenerateForm when the form is singular.
GramForm global_trace_form(const QuotientAlgebra& A, const Poly& volpoly);

// Coefficient matrix of the Bezoutian of the equations in the monomial basis.
Matrix bezoutian_matrix(const QuotientAlgebra& A, const std::array<Poly, 3>& eqs);
// Gram matrix of the residue pairing (inverse of the Bezoutian matrix).
GramForm residue_form(const QuotientAlgebra& A, const std::array<Poly, 3>& eqs);

UPoly minimal_polynomial(const Matrix& m);
UPoly minimal_polynomial(const FieldElement& a);  // over the prime field

struct AlgebraBlock {
  UPoly factor;                    // power of an irreducible (or unsplit cofactor) dividing the minimal polynomial
  std::size_t rank = 0;
  Matrix idempotent;
  std::vector<Vec> basis;          // spans the block
  GramForm gram;                   // restriction of the pairing to the block
  std::optional<FormClass> cls;    // unset when the restriction is degenerate
  std::optional<std::array<Scalar, 3>> point;  // (c1, c2, c3) when the residue field is the base field
  nlohmann::json to_json() const;
};

struct SplitReport {
  std::array<int, 3> separating{1, 2, 4};
  bool separating_ok = false;  // minimal polynomial has degree dim A
  UPoly minpoly;
  std::vector<AlgebraBlock> blocks;
};

// Splits A along the minimal polynomial of a separating linear form, using
// rational roots and the minimal polynomials of the hint points as factors.
// `pairing` (Gram on the monomial basis) is restricted to each block.
SplitReport idempotent_split(const QuotientAlgebra& A, const GramForm& pairing,
                             const std::vector<std::array<FieldElement, 3>>& hints = {});

// (c1, c2, c3) of a non-degenerate circle, for use as a split hint.
std::array<FieldElement, 3> affine_point(const Circle& c);

struct ZeroDimReport {
  std::size_t dim = 0;
  GramForm gram;            // the pairing actually classified
  bool etale = false;       // trace form nondegenerate
  std::string pairing;      // "trace" or "residue"
  FormClass formclass;
  bool crosscheck_ok = false;  // rank, signature and det square class of gram agree with formclass
  SplitReport split;

  std::vector<std::array<Scalar, 3>> rational_points() const;
  nlohmann::json to_json() const;
};

ZeroDimReport analyze(const Configuration& cfg, const std::vector<std::array<FieldElement, 3>>& hints = {});

}  // namespace apollo
