#include "apollonius/quadform.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "apollonius/errors.hpp"
#include "apollonius/numtheory.hpp"

namespace apollo {

namespace {

Scalar zero_of(std::int64_t p) { return p == 0 ? Scalar() : Scalar::mod(0, p); }

// Integer in the same square class as q.
mpz_class square_class_integer(const mpq_class& q) { return q.get_num() * q.get_den(); }

std::int64_t canonical_fp_disc(bool residue, std::int64_t p) { return residue ? 1 : nt::least_nonresidue(p); }

bool is_rational_square(const mpq_class& q) {
  return nt::exact_sqrt(q.get_num()).has_value() && nt::exact_sqrt(q.get_den()).has_value();
}

int pow_sign(int base, long e) { return (e % 2 == 0) ? 1 : base; }

}  // namespace

bool GramForm::symmetric() const {
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!(matrix[i][j] == matrix[j][i])) return false;
    }
  }
  return true;
}

nlohmann::json GramForm::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (auto& row : matrix) {
    nlohmann::json r = nlohmann::json::array();
    for (auto& v : row) r.push_back(v.str());
    rows.push_back(r);
  }
  return rows;
}

std::vector<Scalar> diagonalize(const GramForm& form, PivotOrder order) {
  Matrix m = form.matrix;
  const std::size_t n = m.size();
  const Scalar zero = zero_of(form.prime);
  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;
  std::vector<Scalar> diag;
  std::size_t zeros = 0;

  while (!alive.empty()) {
    auto pick = [&](auto first, auto last) {
      return std::find_if(first, last, [&](std::size_t i) { return !m[i][i].is_zero(); });
    };
    std::size_t piv = n;
    if (order == PivotOrder::Forward) {
      auto it = pick(alive.begin(), alive.end());
      if (it != alive.end()) piv = *it;
    } else {
      auto it = pick(alive.rbegin(), alive.rend());
      if (it != alive.rend()) piv = *it;
    }
    if (piv == n) {
      // No usable diagonal entry: fold a row with a nonzero off-diagonal entry into another.
      bool folded = false;
      for (std::size_t a = 0; a < alive.size() && !folded; ++a) {
        for (std::size_t b = a + 1; b < alive.size() && !folded; ++b) {
          const std::size_t i = alive[a], j = alive[b];
          if (m[i][j].is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k) m[i][k] += m[j][k];
          for (std::size_t k = 0; k < n; ++k) m[k][i] += m[k][j];
          folded = true;
        }
      }
      if (!folded) {
        zeros = alive.size();
        break;
      }
      continue;
    }
    const Scalar d = m[piv][piv];
    diag.push_back(d);
    alive.erase(std::find(alive.begin(), alive.end(), piv));
    for (std::size_t i : alive) {
      if (m[i][piv].is_zero()) continue;
      const Scalar f = m[i][piv] / d;
      for (std::size_t j : alive) m[i][j] -= f * m[piv][j];
      m[i][piv] = zero;
    }
    for (std::size_t i : alive) m[piv][i] = zero;
  }
  for (std::size_t i = 0; i < zeros; ++i) diag.push_back(zero);
  return diag;
}

int FormClass::hasse_at(const mpz_class& place) const {
  auto it = hasse.find(place);
  return it == hasse.end() ? 1 : it->second;
}

std::vector<mpz_class> FormClass::nontrivial_places() const {
  std::vector<mpz_class> out;
  for (auto& [p, h] : hasse) {
    if (h == -1) out.push_back(p);
  }
  return out;
}

nlohmann::json FormClass::to_json() const {
  nlohmann::json j;
  j["rank"] = rank;
  j["disc"] = disc.get_str();
  if (signature) j["signature"] = *signature;
  if (nullity != 0) j["nullity"] = nullity;
  nlohmann::json h = nlohmann::json::array();
  for (auto& [p, v] : hasse) h.push_back({p == kRealPlace ? std::string("inf") : p.get_str(), v});
  if (prime == 0) j["hasse"] = h;
  if (!complete()) {
    nlohmann::json u = nlohmann::json::array();
    for (auto& c : unresolved) u.push_back(c.get_str());
    j["unresolved"] = u;
  }
  return j;
}

std::string FormClass::str() const {
  std::ostringstream os;
  os << "rank " << rank << ", disc " << disc.get_str();
  if (signature) os << ", signature " << *signature;
  if (nullity != 0) os << ", nullity " << nullity;
  if (prime == 0) {
    auto bad = nontrivial_places();
    if (bad.empty()) {
      os << ", hasse trivial";
    } else {
      os << ", hasse -1 at {";
      for (std::size_t i = 0; i < bad.size(); ++i) {
        os << (i ? "," : "") << (bad[i] == kRealPlace ? std::string("inf") : bad[i].get_str());
      }
      os << "}";
    }
  }
  if (!complete()) os << " (incomplete)";
  return os.str();
}

bool operator==(const FormClass& a, const FormClass& b) {
  if (a.prime != b.prime || a.rank != b.rank || a.nullity != b.nullity || a.disc != b.disc ||
      a.signature != b.signature) {
    return false;
  }
  for (auto& [p, v] : a.hasse) {
    if (b.hasse_at(p) != v) return false;
  }
  for (auto& [p, v] : b.hasse) {
    if (a.hasse_at(p) != v) return false;
  }
  return true;
}

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& place) {
  if (a == 0 || b == 0) throw MathError(ErrorKind::ZeroArgument, "Hilbert symbol of zero");
  const mpz_class A = square_class_integer(a), B = square_class_integer(b);
  if (place == kRealPlace) return (A < 0 && B < 0) ? -1 : 1;
  mpz_class u = A, v = B;
  const long alpha = static_cast<long>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), place.get_mpz_t()));
  const long beta = static_cast<long>(mpz_remove(v.get_mpz_t(), v.get_mpz_t(), place.get_mpz_t()));
  if (place == 2) {
    const unsigned long u8 = mpz_fdiv_ui(u.get_mpz_t(), 8), v8 = mpz_fdiv_ui(v.get_mpz_t(), 8);
    const long eu = (u8 % 4 == 3) ? 1 : 0, ev = (v8 % 4 == 3) ? 1 : 0;
    const long wu = (u8 == 3 || u8 == 5) ? 1 : 0, wv = (v8 == 3 || v8 == 5) ? 1 : 0;
    return pow_sign(-1, eu * ev + alpha * wv + beta * wu);
  }
  int s = 1;
  if ((alpha * beta) % 2 != 0 && mpz_fdiv_ui(place.get_mpz_t(), 4) == 3) s = -s;
  s *= pow_sign(nt::legendre(u, place), beta);
  s *= pow_sign(nt::legendre(v, place), alpha);
  return s;
}

FormClass hyperbolic(int m, std::int64_t prime) {
  FormClass c;
  c.prime = prime;
  c.rank = 2 * m;
  if (prime == 0) {
    c.disc = (m % 2 == 0) ? 1 : -1;
    c.signature = 0;
    const int h = pow_sign(-1, static_cast<long>(m) * (m - 1) / 2);
    c.hasse[kRealPlace] = h;
    c.hasse[2] = h;
  } else {
    const bool residue = m % 2 == 0 || nt::legendre(mpz_class(-1), mpz_class(static_cast<long>(prime))) == 1;
    c.disc = static_cast<long>(canonical_fp_disc(residue, prime));
  }
  return c;
}

FormClass add_forms(const FormClass& x, const FormClass& y) {
  if (x.prime != y.prime) throw MathError(ErrorKind::FieldMismatch, "forms over different fields");
  FormClass c;
  c.prime = x.prime;
  c.rank = x.rank + y.rank;
  c.nullity = x.nullity + y.nullity;
  c.unresolved = x.unresolved;
  c.unresolved.insert(c.unresolved.end(), y.unresolved.begin(), y.unresolved.end());
  if (x.prime != 0) {
    const bool rx = x.disc == 1, ry = y.disc == 1;
    c.disc = static_cast<long>(canonical_fp_disc(rx == ry, x.prime));
    return c;
  }
  if (x.signature && y.signature) c.signature = *x.signature + *y.signature;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.disc.get_mpz_t(), y.disc.get_mpz_t());
  c.disc = (x.disc / g) * (y.disc / g);
  std::set<mpz_class> places{kRealPlace, mpz_class(2)};
  for (auto& [p, v] : x.hasse) places.insert(p);
  for (auto& [p, v] : y.hasse) places.insert(p);
  for (auto& p : places) {
    c.hasse[p] = x.hasse_at(p) * y.hasse_at(p) * hilbert_symbol(mpq_class(x.disc), mpq_class(y.disc), p);
  }
  return c;
}

FormClass invariants(const std::vector<Scalar>& diag, std::int64_t prime) {
  std::vector<Scalar> entries;
  int zeros = 0;
  for (auto& d : diag) {
    if (d.is_zero()) {
      ++zeros;
    } else {
      entries.push_back(d);
    }
  }

  if (prime != 0) {
    FormClass c;
    c.prime = prime;
    c.rank = static_cast<int>(entries.size());
    c.nullity = zeros;
    bool residue = true;
    for (auto& e : entries) {
      if (nt::legendre(mpz_class(static_cast<long>(e.in_field(prime).residue())),
                       mpz_class(static_cast<long>(prime))) == -1) {
        residue = !residue;
      }
    }
    c.disc = static_cast<long>(canonical_fp_disc(residue, prime));
    return c;
  }

  // Peel off hyperbolic pairs <a> + <b> with -ab a square.
  std::vector<bool> used(entries.size(), false);
  int pairs = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (used[j]) continue;
      if (is_rational_square(-(entries[i].q() * entries[j].q()))) {
        used[i] = used[j] = true;
        ++pairs;
        break;
      }
    }
  }

  FormClass rest;
  rest.prime = 0;
  rest.signature = 0;
  std::vector<mpz_class> reps;
  std::map<mpz_class, int> parity;
  int negatives = 0;
  std::set<mpz_class> places{kRealPlace, mpz_class(2)};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (used[i]) continue;
    const nt::SquareClass sc = nt::square_class(entries[i].q());
    reps.push_back(sc.rep);
    *rest.signature += sc.rep > 0 ? 1 : -1;
    if (sc.rep < 0) ++negatives;
    for (auto& p : sc.primes) {
      parity[p] ^= 1;
      places.insert(p);
    }
    for (auto& c : sc.unresolved) {
      parity[c] ^= 1;
      rest.unresolved.push_back(c);
    }
  }
  rest.rank = static_cast<int>(reps.size());
  mpz_class disc = negatives % 2 == 0 ? 1 : -1;
  for (auto& [atom, odd] : parity) {
    if (odd != 0) disc *= atom;
  }
  rest.disc = disc;
  for (auto& p : places) {
    int h = 1;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) h *= hilbert_symbol(mpq_class(reps[i]), mpq_class(reps[j]), p);
    }
    rest.hasse[p] = h;
  }

  FormClass out = pairs > 0 ? add_forms(rest, hyperbolic(pairs, 0)) : rest;
  out.nullity = zeros;
  return out;
}

FormClass classify(const GramForm& form, PivotOrder order) { return invariants(diagonalize(form, order), form.prime); }

HyperbolicReport is_multiple_of_H(const FormClass& cls, int m) {
  const FormClass target = hyperbolic(m, cls.prime);
  if (cls.nullity != 0) return {false, "degenerate form (nullity " + std::to_string(cls.nullity) + ")"};
  if (cls.rank != target.rank) {
    return {false, "rank " + std::to_string(cls.rank) + " != " + std::to_string(target.rank)};
  }
  if (cls.disc != target.disc) return {false, "disc " + cls.disc.get_str() + " != " + target.disc.get_str()};
  if (cls.prime == 0) {
    if (cls.signature != target.signature) {
      return {false, "signature " + (cls.signature ? std::to_string(*cls.signature) : std::string("?")) + " != 0"};
    }
    if (!cls.complete()) return {false, "Hasse invariant undetermined (factoring budget exhausted)"};
    std::set<mpz_class> places;
    for (auto& [p, v] : cls.hasse) places.insert(p);
    for (auto& [p, v] : target.hasse) places.insert(p);
    for (auto& p : places) {
      if (cls.hasse_at(p) != target.hasse_at(p)) {
        return {false, "Hasse symbol differs at " + (p == kRealPlace ? std::string("inf") : p.get_str())};
      }
    }
  }
  return {true, std::to_string(m) + "H"};
}

GramForm trace_form(const FieldDescriptor& L, const FieldElement& a) {
  const FieldElement x = a.promote(L);
  if (x.is_zero()) throw MathError(ErrorKind::ZeroScalar, "trace form of zero");
  const std::size_t n = L.degree();
  std::vector<FieldElement> basis;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::vector<Scalar> c(n, zero_of(L.prime()));
    c[mask] = L.prime() == 0 ? Scalar(1L) : Scalar::mod(1, L.prime());
    basis.emplace_back(L, std::move(c));
  }
  GramForm g;
  g.prime = L.prime();
  g.matrix.assign(n, std::vector<Scalar>(n, zero_of(L.prime())));
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement xi = x * basis[i];
    for (std::size_t j = i; j < n; ++j) {
      g.matrix[i][j] = trace_to_base(xi * basis[j]);
      g.matrix[j][i] = g.matrix[i][j];
    }
  }
  return g;
}

Scalar determinant(const Matrix& input) {
  Matrix m = input;
  const std::size_t n = m.size();
  Scalar det = (n > 0 && m[0][0].prime() != 0) ? Scalar::mod(1, m[0][0].prime()) : Scalar(1L);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return det * Scalar(0L);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Scalar f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::size_t matrix_rank(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const Scalar f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace apollo
