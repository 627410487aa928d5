#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "apollonius/exactfield.hpp"
#include "apollonius/scalar.hpp"

namespace apollo {

constexpr int kMaxVars = 6;
using Exponent = std::array<std::uint8_t, kMaxVars>;

int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);

// Degree-reverse-lexicographic order, "greater first".
struct DegRevLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse multivariate polynomial over a prime field, terms sorted in degrevlex.
class Poly {
 public:
  using Terms = std::map<Exponent, Scalar, DegRevLexGreater>;

  Poly() = default;
  explicit Poly(std::int64_t p) : p_(p) {}
  static Poly constant(const Scalar& c);
  static Poly variable(int index, std::int64_t p = 0);
  static Poly monomial(const Exponent& e, const Scalar& c);

  std::int64_t prime() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Scalar& leading_coeff() const { return terms_.begin()->second; }
  int degree() const;
  Scalar coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Scalar& c);
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& c) const;
  Poly shifted(const Exponent& e, const Scalar& c) const;  // (c x^e) * this
  Poly monic() const;
  friend bool operator==(const Poly& a, const Poly& b);

  Scalar evaluate(const std::vector<Scalar>& point) const;
  FieldElement evaluate(const std::vector<FieldElement>& point) const;
  Poly derivative(int var) const;
  // Keeps only the terms of total degree d.
  Poly homogeneous_part(int d) const;

  std::string str(const std::vector<std::string>& names = {"c1", "c2", "c3", "y1", "y2", "y3"}) const;

 private:
  void absorb_prime(std::int64_t p);
  std::int64_t p_ = 0;
  Terms terms_;
};

// Dense univariate polynomial, coefficients low degree first, trailing zeros trimmed.
template <typename T>
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<T> c) : c_(std::move(c)) { trim(); }
  static Univariate constant(const T& v) { return Univariate(std::vector<T>{v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const { return i < static_cast<int>(c_.size()) && i >= 0 ? c_[static_cast<std::size_t>(i)] : T(0); }
  const T& lead() const { return c_.back(); }

  Univariate& operator+=(const Univariate& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Univariate& operator-=(const Univariate& o) { return *this += -o; }
  Univariate operator-() const {
    Univariate out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }
  friend Univariate operator+(Univariate a, const Univariate& b) { return a += b; }
  friend Univariate operator-(Univariate a, const Univariate& b) { return a -= b; }
  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return Univariate();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Univariate(std::move(out));
  }
  Univariate scaled(const T& s) const {
    Univariate out = *this;
    for (auto& v : out.c_) v *= s;
    out.trim();
    return out;
  }
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Univariate derivative() const {
    std::vector<T> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * T(static_cast<long>(i)));
    return Univariate(std::move(out));
  }
  friend bool operator==(const Univariate& a, const Univariate& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<T> c_;
};

using UPoly = Univariate<Scalar>;
using TPoly = Univariate<FieldElement>;

// Euclidean algorithms over a prime field.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& a);
UPoly gcd(const UPoly& a, const UPoly& b);
// Returns (g, s, t) with s*a + t*b = g monic.
std::tuple<UPoly, UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b);
UPoly linear_factor(const Scalar& root);  // x - root

// Rational (or F_p) roots with multiplicity, in ascending canonical order.
std::vector<std::pair<Scalar, int>> base_roots(const UPoly& f);

std::string upoly_str(const UPoly& f, const std::string& var = "x");

}  // namespace apollo
