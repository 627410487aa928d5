#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace apollo {

// Element of the prime field: Q when prime() == 0, F_p otherwise.
//
// A rational value mixed with an F_p value is reduced modulo p first, so
// integer literals can be used freely inside formulas.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Scalar(const mpz_class& z) : q_(z) {}

  static Scalar mod(const mpz_class& v, std::int64_t p);
  static Scalar mod(std::int64_t v, std::int64_t p);

  std::int64_t prime() const { return p_; }
  bool rational() const { return p_ == 0; }
  const mpq_class& q() const { return q_; }
  std::int64_t residue() const { return r_; }

  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  // Reinterprets this value in F_p (p > 0) or returns it unchanged for p == 0.
  Scalar in_field(std::int64_t p) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inv() const;
  Scalar pow(long e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order used for canonical sorting (not the field order).
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  // Square root in the prime field, if any. Q: positive root. F_p: smaller residue.
  std::optional<Scalar> sqrt() const;

  // Sign for Q; throws for F_p.
  int sign() const;

  // "p/q" (or "n" for integers) over Q, "n mod p" over F_p.
  std::string str() const;
  static Scalar parse(const std::string& text, std::int64_t p = 0);

 private:
  void unify(Scalar& o);

  std::int64_t p_ = 0;
  mpq_class q_;
  std::int64_t r_ = 0;
};

bool canonical_less(const Scalar& a, const Scalar& b);

}  // namespace apollo
