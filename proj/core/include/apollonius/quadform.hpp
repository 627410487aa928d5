#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "apollonius/exactfield.hpp"
#include "apollonius/scalar.hpp"

namespace apollo {

using Matrix = std::vector<std::vector<Scalar>>;

// Symmetric bilinear form over a prime field, given by its Gram matrix.
struct GramForm {
  std::int64_t prime = 0;
  Matrix matrix;

  std::size_t size() const { return matrix.size(); }
  bool symmetric() const;
  nlohmann::json to_json() const;
};

enum class PivotOrder { Forward, Backward };

// Congruent diagonal form; zero entries (the radical) come last.
std::vector<Scalar> diagonalize(const GramForm& form, PivotOrder order = PivotOrder::Forward);

// Key used for the real place in Hasse maps.
inline const mpz_class kRealPlace{0};

// Isometry class of a nondegenerate form (plus a diagnosed radical).
//
// Over Q the hasse map records every place at which the symbol was
// evaluated; places absent from the map carry +1. Over F_p the class is
// rank and discriminant (1 or the least non-residue).
struct FormClass {
  std::int64_t prime = 0;
  int rank = 0;
  int nullity = 0;
  mpz_class disc = 1;
  std::optional<int> signature;
  std::map<mpz_class, int> hasse;
  std::vector<mpz_class> unresolved;  // composites the factoring budget could not split

  bool complete() const { return unresolved.empty(); }
  int hasse_at(const mpz_class& place) const;
  std::vector<mpz_class> nontrivial_places() const;

  nlohmann::json to_json() const;
  std::string str() const;
};

bool operator==(const FormClass& a, const FormClass& b);
inline bool operator!=(const FormClass& a, const FormClass& b) { return !(a == b); }

// (a, b)_v with v a prime or kRealPlace.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& place);

FormClass invariants(const std::vector<Scalar>& diag, std::int64_t prime);
FormClass classify(const GramForm& form, PivotOrder order = PivotOrder::Forward);

// m copies of the hyperbolic plane.
FormClass hyperbolic(int m, std::int64_t prime);

FormClass add_forms(const FormClass& x, const FormClass& y);

struct HyperbolicReport {
  bool holds = false;
  std::string reason;
};
HyperbolicReport is_multiple_of_H(const FormClass& cls, int m);

// Gram matrix of (x, y) -> Tr_{L/k}(a x y) on the tower basis.
GramForm trace_form(const FieldDescriptor& L, const FieldElement& a);

// Exact determinant (fraction-free elimination over the prime field).
Scalar determinant(const Matrix& m);
std::size_t matrix_rank(const Matrix& m);

}  // namespace apollo
