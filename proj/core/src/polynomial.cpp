#include "apollonius/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "apollonius/numtheory.hpp"

namespace apollo {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out{};
  for (int i = 0; i < kMaxVars; ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent out{};
  for (int i = 0; i < kMaxVars; ++i) out[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return out;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent out{};
  for (int i = 0; i < kMaxVars; ++i) out[i] = static_cast<std::uint8_t>(a[i] - b[i]);
  return out;
}

bool DegRevLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---- Poly ----

void Poly::absorb_prime(std::int64_t p) {
  if (p == p_ || p == 0) return;
  if (p_ != 0) throw MathError(ErrorKind::FieldMismatch, "polynomials over different prime fields");
  p_ = p;
  for (auto& [e, c] : terms_) c = c.in_field(p);
}

Poly Poly::constant(const Scalar& c) { return monomial(Exponent{}, c); }

Poly Poly::variable(int index, std::int64_t p) {
  Exponent e{};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(e, p == 0 ? Scalar(1L) : Scalar::mod(1, p));
}

Poly Poly::monomial(const Exponent& e, const Scalar& c) {
  Poly out(c.prime());
  out.add_term(e, c);
  return out;
}

int Poly::degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Scalar Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return p_ == 0 ? Scalar() : Scalar::mod(0, p_);
  return it->second;
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  absorb_prime(c.prime());
  auto [it, inserted] = terms_.try_emplace(e, c.in_field(p_));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  absorb_prime(o.p_);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  absorb_prime(o.p_);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.p_ != 0 ? a.p_ : b.p_);
  for (auto& [ea, ca] : a.terms_) {
    for (auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly out(p_);
  if (c.is_zero()) return out;
  out.absorb_prime(c.prime());
  for (auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

Poly Poly::shifted(const Exponent& s, const Scalar& c) const {
  Poly out(p_);
  if (c.is_zero()) return out;
  out.absorb_prime(c.prime());
  for (auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + s, v * c);
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inv());
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (auto& [e, c] : a.terms_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  Scalar acc = p_ == 0 ? Scalar() : Scalar::mod(0, p_);
  for (auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < point.size() && i < kMaxVars; ++i) {
      if (e[i] != 0) t *= point[i].pow(e[i]);
    }
    acc += t;
  }
  return acc;
}

FieldElement Poly::evaluate(const std::vector<FieldElement>& point) const {
  FieldElement acc = point.empty() ? FieldElement() : FieldElement::zero(point[0].field());
  for (auto& [e, c] : terms_) {
    FieldElement t(c);
    for (std::size_t i = 0; i < point.size() && i < kMaxVars; ++i) {
      if (e[i] != 0) t *= point[i].pow(e[i]);
    }
    acc += t;
  }
  return acc;
}

Poly Poly::derivative(int var) const {
  Poly out(p_);
  for (auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(var)] == 0) continue;
    Exponent d = e;
    d[static_cast<std::size_t>(var)] -= 1;
    out.add_term(d, c * Scalar(static_cast<long>(e[static_cast<std::size_t>(var)])));
  }
  return out;
}

Poly Poly::homogeneous_part(int d) const {
  Poly out(p_);
  for (auto& [e, c] : terms_) {
    if (total_degree(e) == d) out.add_term(e, c);
  }
  return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      os << "*" << names[static_cast<std::size_t>(i)];
      if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
    }
  }
  return os.str();
}

// ---- univariate over the prime field ----

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - db + 1), Scalar());
  const Scalar inv_lead = b.lead().inv();
  for (int i = a.degree(); i >= db; --i) {
    const Scalar c = rem[static_cast<std::size_t>(i)] * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(quo), UPoly(rem)};
}

UPoly monic(const UPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inv());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return monic(x);
}

std::tuple<UPoly, UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(Scalar(1L)), s1;
  UPoly t0, t1 = UPoly::constant(Scalar(1L));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    UPoly s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    UPoly t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = r0.lead().inv();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UPoly linear_factor(const Scalar& root) {
  const Scalar one = root.prime() == 0 ? Scalar(1L) : Scalar::mod(1, root.prime());
  return UPoly(std::vector<Scalar>{-root, one});
}

namespace {

int multiplicity(UPoly f, const Scalar& root) {
  int m = 0;
  const UPoly lin = linear_factor(root);
  while (!f.is_zero() && f.degree() >= 1) {
    auto [q, r] = divmod(f, lin);
    if (!r.is_zero()) break;
    ++m;
    f = q;
  }
  return m;
}

std::vector<mpz_class> integer_coeffs(const UPoly& f) {
  mpz_class l = 1;
  for (auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.q().get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (auto& c : f.coeffs()) {
    mpq_class v = c.q() * l;
    out.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

mpz_class eval_mod(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % m;
  if (acc < 0) acc += m;
  return acc;
}

std::optional<mpq_class> reconstruct(const mpz_class& r, const mpz_class& m, const mpz_class& bound) {
  mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

std::vector<Scalar> rational_roots_squarefree(const UPoly& g) {
  std::vector<Scalar> roots;
  std::vector<mpz_class> c = integer_coeffs(g);
  if (c[0] == 0) {
    roots.emplace_back(0L);
    c.erase(c.begin());
  }
  if (c.size() <= 1) return roots;
  if (c.size() == 2) {
    roots.emplace_back(mpq_class(-c[0], c[1]));
    return roots;
  }
  const mpz_class lead = c.back();
  const mpz_class bound = std::max(abs(c.front()), abs(lead));
  const mpz_class target = 2 * bound * bound + 1;

  for (std::int64_t ell = 3;; ell += 2) {
    if (!nt::is_prime_u64(static_cast<std::uint64_t>(ell))) continue;
    if (nt::normmod(lead, ell) == 0) continue;
    std::vector<Scalar> modc;
    for (auto& v : c) modc.push_back(Scalar::mod(v, ell));
    UPoly gm(modc);
    if (gcd(gm, gm.derivative()).degree() != 0) continue;
    std::vector<std::int64_t> seeds;
    for (std::int64_t x = 0; x < ell; ++x) {
      if (gm.evaluate(Scalar::mod(x, ell)).is_zero()) seeds.push_back(x);
    }
    std::vector<mpz_class> dc;
    for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<unsigned long>(i));
    for (std::int64_t seed : seeds) {
      mpz_class m = static_cast<long>(ell), r = static_cast<long>(seed);
      while (m <= target) {
        m *= m;
        mpz_class fv = eval_mod(c, r, m), dv = eval_mod(dc, r, m), inv;
        mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t());
        r = (r - fv * inv) % m;
        if (r < 0) r += m;
      }
      auto q = reconstruct(r, m, bound);
      if (!q) continue;
      Scalar s(*q);
      if (g.evaluate(s).is_zero() &&
          std::none_of(roots.begin(), roots.end(), [&](const Scalar& x) { return x == s; })) {
        roots.push_back(s);
      }
    }
    return roots;
  }
}

}  // namespace

std::vector<std::pair<Scalar, int>> base_roots(const UPoly& f) {
  std::vector<std::pair<Scalar, int>> out;
  if (f.degree() < 1) return out;
  const std::int64_t p = f.lead().prime();
  std::vector<Scalar> roots;
  if (p != 0) {
    if (p > 5000000) throw MathError(ErrorKind::InvalidPrime, "root enumeration limited to small primes");
    for (std::int64_t x = 0; x < p; ++x) {
      if (f.evaluate(Scalar::mod(x, p)).is_zero()) roots.push_back(Scalar::mod(x, p));
    }
  } else {
    const UPoly g = divmod(f, gcd(f, f.derivative())).first;
    roots = rational_roots_squarefree(g);
  }
  std::sort(roots.begin(), roots.end(), canonical_less);
  for (auto& r : roots) out.emplace_back(r, multiplicity(f, r));
  return out;
}

std::string upoly_str(const UPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    if (f.coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << f.coeff(i).str() << ")";
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace apollo
