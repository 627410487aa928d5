#include "apollonius/scalar.hpp"

#include <cctype>

#include "apollonius/errors.hpp"
#include "apollonius/numtheory.hpp"

namespace apollo {

namespace {

std::int64_t reduce(const mpq_class& q, std::int64_t p) {
  const std::int64_t den = nt::normmod(q.get_den(), p);
  if (den == 0) {
    throw MathError(ErrorKind::DivisionByZero,
                    "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  }
  return nt::mulmod(nt::normmod(q.get_num(), p), nt::invmod(den, p), p);
}

}  // namespace

Scalar Scalar::mod(const mpz_class& v, std::int64_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = nt::normmod(v, p);
  return s;
}

Scalar Scalar::mod(std::int64_t v, std::int64_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = ((v % p) + p) % p;
  return s;
}

Scalar Scalar::in_field(std::int64_t p) const {
  if (p == p_) return *this;
  if (p == 0) throw MathError(ErrorKind::FieldMismatch, "cannot lift an F_p value to Q");
  if (p_ != 0) throw MathError(ErrorKind::FieldMismatch, "distinct prime fields");
  Scalar s;
  s.p_ = p;
  s.r_ = reduce(q_, p);
  return s;
}

void Scalar::unify(Scalar& o) {
  if (p_ == o.p_) return;
  if (p_ == 0) {
    *this = in_field(o.p_);
  } else {
    o = o.in_field(p_);
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = p_ - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == o.p_ && p_ == 0) {
    q_ += o.q_;
    return *this;
  }
  Scalar b = o;
  unify(b);
  r_ += b.r_;
  if (r_ >= p_) r_ -= p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (p_ == o.p_ && p_ == 0) {
    q_ -= o.q_;
    return *this;
  }
  Scalar b = o;
  unify(b);
  r_ -= b.r_;
  if (r_ < 0) r_ += p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == o.p_ && p_ == 0) {
    q_ *= o.q_;
    return *this;
  }
  Scalar b = o;
  unify(b);
  r_ = nt::mulmod(r_, b.r_, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw MathError(ErrorKind::DivisionByZero, "scalar division by zero");
  if (p_ == o.p_ && p_ == 0) {
    q_ /= o.q_;
    return *this;
  }
  Scalar b = o;
  unify(b);
  if (b.r_ == 0) throw MathError(ErrorKind::DivisionByZero, "scalar division by zero");
  r_ = nt::mulmod(r_, nt::invmod(b.r_, p_), p_);
  return *this;
}

Scalar Scalar::inv() const {
  Scalar one(1L);
  if (p_ != 0) one = one.in_field(p_);
  return one / *this;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar acc = p_ == 0 ? Scalar(1L) : Scalar::mod(1, p_);
  Scalar base = *this;
  while (e != 0) {
    if ((e & 1) != 0) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  Scalar x = a, y = b;
  x.unify(y);
  return x.r_ == y.r_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.p_ == 0) return a.q_ < b.q_;
  return a.r_ < b.r_;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (p_ == 0) {
    if (q_ < 0) return std::nullopt;
    auto n = nt::exact_sqrt(q_.get_num());
    auto d = nt::exact_sqrt(q_.get_den());
    if (!n || !d) return std::nullopt;
    return Scalar(mpq_class(*n, *d));
  }
  auto r = nt::sqrt_mod(r_, p_);
  if (!r) return std::nullopt;
  return Scalar::mod(*r, p_);
}

int Scalar::sign() const {
  if (p_ != 0) throw MathError(ErrorKind::NoEmbedding, "F_p has no ordering");
  return sgn(q_);
}

std::string Scalar::str() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(p_);
}

Scalar Scalar::parse(const std::string& raw, std::int64_t p) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw ParseError("empty scalar");
  std::int64_t field = p;
  const auto modpos = text.find("mod");
  if (modpos != std::string::npos) {
    const std::string pstr = text.substr(modpos + 3);
    std::int64_t q = 0;
    try {
      q = std::stoll(pstr);
    } catch (const std::exception&) {
      throw ParseError("bad modulus in '" + raw + "'");
    }
    if (p != 0 && q != p) throw ParseError("modulus mismatch in '" + raw + "'");
    field = q;
    text = text.substr(0, modpos);
  }
  mpq_class value;
  const auto dot = text.find('.');
  try {
    if (dot != std::string::npos && text.find('/') == std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const std::size_t scale = text.size() - dot - 1;
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
      if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad decimal");
      if (digits[0] == '+') digits.erase(0, 1);
      value = mpq_class(mpz_class(digits), den);
    } else {
      if (text[0] == '+') text.erase(0, 1);
      if (value.set_str(text, 10) != 0) throw ParseError("bad rational '" + raw + "'");
      if (value.get_den() == 0) throw ParseError("zero denominator in '" + raw + "'");
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad number '" + raw + "'");
  }
  value.canonicalize();
  Scalar s(value);
  if (field != 0) return s.in_field(field);
  return s;
}

}  // namespace apollo
