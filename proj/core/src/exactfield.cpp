#include "apollonius/exactfield.hpp"

#include <map>
#include <mutex>

#include "apollonius/numtheory.hpp"

namespace apollo {

struct TowerNode {
  std::int64_t p = 0;
  std::shared_ptr<const TowerNode> parent;
  std::vector<Scalar> radicand;  // coordinates in the parent tower
  std::string name;
  int depth = 0;
  bool real = false;  // a real embedding is recorded
  int sign = 0;       // sign of this root under the embedding
  bool sealed = false;
};

namespace {

std::shared_ptr<const TowerNode> base_node(std::int64_t p) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const TowerNode>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) {
    auto n = std::make_shared<TowerNode>();
    n->p = p;
    n->real = (p == 0);
    slot = n;
  }
  return slot;
}

bool nodes_equal(const TowerNode* a, const TowerNode* b) {
  while (a != b) {
    if (a == nullptr || b == nullptr) return false;
    if (a->p != b->p || a->depth != b->depth || a->real != b->real || a->sign != b->sign) return false;
    if (a->radicand.size() != b->radicand.size()) return false;
    for (std::size_t i = 0; i < a->radicand.size(); ++i) {
      if (!(a->radicand[i] == b->radicand[i])) return false;
    }
    a = a->parent.get();
    b = b->parent.get();
  }
  return true;
}

const TowerNode* ancestor(const TowerNode* n, int level) {
  while (n->depth > level) n = n->parent.get();
  return n;
}

Scalar zero_in(std::int64_t p) { return p == 0 ? Scalar() : Scalar::mod(0, p); }
Scalar one_in(std::int64_t p) { return p == 0 ? Scalar(1L) : Scalar::mod(1, p); }

using Coords = std::vector<Scalar>;

bool all_zero(const Scalar* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i].is_zero()) return false;
  }
  return true;
}

bool base_only(const Coords& c) { return c.size() <= 1 || all_zero(c.data() + 1, c.size() - 1); }

Coords add(const Coords& a, const Coords& b) {
  Coords out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Coords sub(const Coords& a, const Coords& b) {
  Coords out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Coords scale(const Coords& a, const Scalar& s) {
  Coords out(a);
  for (auto& x : out) x *= s;
  return out;
}

Coords lower(const Coords& x) { return Coords(x.begin(), x.begin() + static_cast<long>(x.size() / 2)); }
Coords upper(const Coords& x) { return Coords(x.begin() + static_cast<long>(x.size() / 2), x.end()); }

Coords join(const Coords& a, const Coords& b) {
  Coords out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Coords mul_rec(const TowerNode* n, const Coords& x, const Coords& y) {
  if (n->depth == 0) return Coords{x[0] * y[0]};
  const TowerNode* par = n->parent.get();
  const Coords xa = lower(x), xb = upper(x), ya = lower(y), yb = upper(y);
  const bool xb0 = all_zero(xb.data(), xb.size());
  const bool yb0 = all_zero(yb.data(), yb.size());
  if (xb0 && yb0) return join(mul_rec(par, xa, ya), Coords(xa.size(), zero_in(n->p)));
  if (xb0) return join(mul_rec(par, xa, ya), mul_rec(par, xa, yb));
  if (yb0) return join(mul_rec(par, xa, ya), mul_rec(par, xb, ya));
  Coords t1 = mul_rec(par, xa, ya);
  Coords t2 = mul_rec(par, xb, yb);
  Coords t2d = base_only(n->radicand) ? scale(t2, n->radicand[0]) : mul_rec(par, t2, n->radicand);
  Coords cross = sub(sub(mul_rec(par, add(xa, xb), add(ya, yb)), t1), t2);
  return join(add(t1, t2d), cross);
}

Coords inv_rec(const TowerNode* n, const Coords& x) {
  if (n->depth == 0) {
    if (x[0].is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero");
    return Coords{x[0].inv()};
  }
  const TowerNode* par = n->parent.get();
  const Coords a = lower(x), b = upper(x);
  if (all_zero(b.data(), b.size())) {
    return join(inv_rec(par, a), Coords(a.size(), zero_in(n->p)));
  }
  Coords b2d = mul_rec(par, mul_rec(par, b, b), n->radicand);
  Coords den = sub(mul_rec(par, a, a), b2d);
  Coords iden = inv_rec(par, den);
  Coords nb = mul_rec(par, b, iden);
  for (auto& v : nb) v = -v;
  return join(mul_rec(par, a, iden), nb);
}

std::optional<Coords> sqrt_rec(const TowerNode* n, const Coords& x) {
  if (n->depth == 0) {
    auto r = x[0].sqrt();
    if (!r) return std::nullopt;
    return Coords{*r};
  }
  const TowerNode* par = n->parent.get();
  const Coords a = lower(x), b = upper(x);
  const Coords zero(a.size(), zero_in(n->p));
  if (all_zero(b.data(), b.size())) {
    if (auto r = sqrt_rec(par, a)) return join(*r, zero);
    Coords q = mul_rec(par, a, inv_rec(par, n->radicand));
    if (auto r = sqrt_rec(par, q)) return join(zero, *r);
    return std::nullopt;
  }
  Coords norm = sub(mul_rec(par, a, a), mul_rec(par, mul_rec(par, b, b), n->radicand));
  auto nr = sqrt_rec(par, norm);
  if (!nr) return std::nullopt;
  const Scalar half = one_in(n->p) / Scalar(2L);
  for (int branch : {+1, -1}) {
    Coords u2 = branch > 0 ? add(a, *nr) : sub(a, *nr);
    u2 = scale(u2, half);
    if (all_zero(u2.data(), u2.size())) continue;
    auto u = sqrt_rec(par, u2);
    if (!u) continue;
    Coords v = mul_rec(par, b, inv_rec(par, scale(*u, Scalar(2L))));
    return join(*u, v);
  }
  return std::nullopt;
}

// ---- interval evaluation for the real embedding ----

struct Interval {
  mpq_class lo, hi;
};

Interval iadd(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval imul(const Interval& a, const Interval& b) {
  mpq_class p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval out{p[0], p[0]};
  for (auto& v : p) {
    if (v < out.lo) out.lo = v;
    if (v > out.hi) out.hi = v;
  }
  return out;
}

Interval ieval(const TowerNode* n, const Coords& x, const std::vector<Interval>& roots) {
  if (n->depth == 0) return {x[0].q(), x[0].q()};
  const TowerNode* par = n->parent.get();
  return iadd(ieval(par, lower(x), roots), imul(ieval(par, upper(x), roots), roots[n->depth - 1]));
}

mpq_class dyadic_sqrt(const mpq_class& v, int bits, bool upper_bound) {
  // floor/ceil of sqrt(v) * 2^bits, divided by 2^bits
  mpz_class scaled_num = v.get_num();
  mpz_class den = v.get_den();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), 2 * static_cast<unsigned>(bits));
  mpz_class q;
  if (upper_bound) {
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
  }
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
  if (upper_bound && r * r < q) r += 1;
  mpz_class d = 1;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned>(bits));
  mpq_class out(r, d);
  out.canonicalize();
  return out;
}

// Root enclosures for every level of the tower; nullopt if precision is too low.
std::optional<std::vector<Interval>> root_intervals(const TowerNode* top, int bits) {
  std::vector<const TowerNode*> chain;
  for (const TowerNode* n = top; n->depth > 0; n = n->parent.get()) chain.insert(chain.begin(), n);
  std::vector<Interval> roots;
  for (const TowerNode* n : chain) {
    Interval d = ieval(n->parent.get(), n->radicand, roots);
    if (d.lo <= 0) return std::nullopt;
    Interval r{dyadic_sqrt(d.lo, bits, false), dyadic_sqrt(d.hi, bits, true)};
    if (n->sign < 0) r = Interval{-r.hi, -r.lo};
    roots.push_back(r);
  }
  return roots;
}

}  // namespace

// ---- FieldDescriptor ----

FieldDescriptor::FieldDescriptor() : node_(base_node(0)) {}

FieldDescriptor FieldDescriptor::rationals() { return FieldDescriptor(); }

FieldDescriptor FieldDescriptor::prime_field(std::int64_t p) {
  if (p <= 2 || !nt::is_prime_u64(static_cast<std::uint64_t>(p))) {
    throw MathError(ErrorKind::InvalidPrime, "p must be an odd prime, got " + std::to_string(p));
  }
  return FieldDescriptor(base_node(p));
}

std::int64_t FieldDescriptor::prime() const { return node_->p; }
int FieldDescriptor::depth() const { return node_->depth; }
bool FieldDescriptor::has_embedding() const { return node_->real; }
bool FieldDescriptor::sealed() const { return node_->sealed; }

std::vector<int> FieldDescriptor::embedding_signs() const {
  std::vector<int> out(static_cast<std::size_t>(depth()));
  for (const TowerNode* n = node_.get(); n->depth > 0; n = n->parent.get()) {
    out[static_cast<std::size_t>(n->depth - 1)] = n->sign;
  }
  return out;
}

FieldDescriptor FieldDescriptor::subtower(int level) const {
  std::shared_ptr<const TowerNode> n = node_;
  while (n->depth > level) n = n->parent;
  return FieldDescriptor(n);
}

FieldElement FieldDescriptor::radicand(int j) const {
  const TowerNode* n = ancestor(node_.get(), j + 1);
  return FieldElement(subtower(j), n->radicand);
}

const std::string& FieldDescriptor::root_name(int j) const { return ancestor(node_.get(), j + 1)->name; }

std::string FieldDescriptor::basis_label(std::size_t mask) const {
  if (mask == 0) return "1";
  std::string out;
  for (int j = 0; j < depth(); ++j) {
    if ((mask >> j & 1u) == 0) continue;
    if (!out.empty()) out += "*";
    out += root_name(j);
  }
  return out;
}

bool FieldDescriptor::same_as(const FieldDescriptor& other) const {
  return nodes_equal(node_.get(), other.node_.get());
}

bool FieldDescriptor::is_subtower_of(const FieldDescriptor& other) const {
  if (other.depth() < depth() || other.prime() != prime()) return false;
  return nodes_equal(node_.get(), ancestor(other.node_.get(), depth()));
}

nlohmann::json FieldDescriptor::to_json() const {
  nlohmann::json j;
  if (prime() == 0) {
    j["base"] = "Q";
  } else {
    j["base"] = {{"Fp", prime()}};
  }
  nlohmann::json adj = nlohmann::json::array();
  for (int k = 0; k < depth(); ++k) {
    adj.push_back({{"name", root_name(k)}, {"radicand", radicand(k).to_json()}});
  }
  j["adjoined"] = adj;
  if (has_embedding() && prime() == 0) {
    j["embedding"] = embedding_signs();
  } else {
    j["embedding"] = nullptr;
  }
  return j;
}

std::string FieldDescriptor::str() const {
  std::string out = prime() == 0 ? "Q" : "F" + std::to_string(prime());
  if (depth() == 0) return out;
  out += "(";
  for (int k = 0; k < depth(); ++k) {
    if (k > 0) out += ", ";
    out += "sqrt(" + radicand(k).str() + ")";
  }
  return out + ")";
}

FieldDescriptor extend_tower(const FieldDescriptor& K, const FieldElement& d, std::string name, int sign) {
  auto n = std::make_shared<TowerNode>();
  n->p = K.prime();
  n->parent = K.node_;
  n->radicand = d.promote(K).coords();
  n->depth = K.depth() + 1;
  n->name = name.empty() ? "r" + std::to_string(n->depth) : std::move(name);
  n->sealed = K.sealed() || !d.in_base();
  if (K.has_embedding() && K.prime() == 0 && sign_under_embedding(K, d) > 0) {
    n->real = true;
    n->sign = sign >= 0 ? +1 : -1;
  }
  return FieldDescriptor(n);
}

FieldDescriptor common_field(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (a.node() == b.node()) return a;
  if (a.is_subtower_of(b)) return b;
  if (b.is_subtower_of(a)) return a;
  if (a.prime() == 0 && a.depth() == 0 && b.prime() != 0) return b;
  if (b.prime() == 0 && b.depth() == 0 && a.prime() != 0) return a;
  throw MathError(ErrorKind::FieldMismatch, a.str() + " vs " + b.str());
}

// ---- FieldElement ----

FieldElement::FieldElement() : coords_{Scalar()} {}
FieldElement::FieldElement(long v) : coords_{Scalar(v)} {}
FieldElement::FieldElement(int v) : coords_{Scalar(v)} {}
FieldElement::FieldElement(const Scalar& s)
    : field_(s.prime() == 0 ? FieldDescriptor() : FieldDescriptor::prime_field(s.prime())), coords_{s} {}

FieldElement::FieldElement(FieldDescriptor field, std::vector<Scalar> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_.degree()) {
    throw std::invalid_argument("FieldElement: expected " + std::to_string(field_.degree()) + " coordinates");
  }
  if (field_.prime() != 0) {
    for (auto& c : coords_) c = c.in_field(field_.prime());
  }
}

FieldElement FieldElement::zero(const FieldDescriptor& k) {
  return FieldElement(k, std::vector<Scalar>(k.degree(), zero_in(k.prime())));
}

FieldElement FieldElement::one(const FieldDescriptor& k) { return constant(k, one_in(k.prime())); }

FieldElement FieldElement::constant(const FieldDescriptor& k, const Scalar& s) {
  FieldElement e = zero(k);
  e.coords_[0] = s.in_field(k.prime());
  return e;
}

FieldElement FieldElement::root(const FieldDescriptor& k, int j) {
  FieldElement e = zero(k);
  e.coords_[std::size_t{1} << j] = one_in(k.prime());
  return e;
}

bool FieldElement::is_zero() const { return all_zero(coords_.data(), coords_.size()); }
bool FieldElement::is_one() const { return in_base() && coords_[0].is_one(); }
bool FieldElement::in_base() const { return base_only(coords_); }

Scalar FieldElement::base_value() const {
  if (!in_base()) throw MathError(ErrorKind::FieldMismatch, "element " + str() + " is not in the base field");
  return coords_[0];
}

FieldElement FieldElement::promote(const FieldDescriptor& bigger) const {
  if (field_.node() == bigger.node()) return *this;
  if (field_.prime() == 0 && field_.depth() == 0 && bigger.prime() != 0) {
    return constant(bigger, coords_[0]);
  }
  if (!field_.is_subtower_of(bigger)) {
    throw MathError(ErrorKind::FieldMismatch, "cannot promote " + field_.str() + " into " + bigger.str());
  }
  std::vector<Scalar> c(bigger.degree(), zero_in(bigger.prime()));
  for (std::size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i];
  return FieldElement(bigger, std::move(c));
}

FieldElement FieldElement::conjugate(int j) const {
  FieldElement out = *this;
  for (std::size_t i = 0; i < out.coords_.size(); ++i) {
    if ((i >> j & 1u) != 0) out.coords_[i] = -out.coords_[i];
  }
  return out;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (field_.node() != o.field_.node()) {
    FieldDescriptor k = common_field(field_, o.field_);
    *this = promote(k);
    FieldElement b = o.promote(k);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
    return *this;
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (field_.node() != o.field_.node()) {
    FieldDescriptor k = common_field(field_, o.field_);
    *this = promote(k);
    coords_ = mul_rec(field_.node(), coords_, o.promote(k).coords_);
    return *this;
  }
  coords_ = mul_rec(field_.node(), coords_, o.coords_);
  return *this;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero");
  return FieldElement(field_, inv_rec(field_.node(), coords_));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inv(); }

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement acc = one(field_), base = *this;
  while (e != 0) {
    if ((e & 1) != 0) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_.node() == b.field_.node()) {
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      if (!(a.coords_[i] == b.coords_[i])) return false;
    }
    return true;
  }
  FieldDescriptor k = common_field(a.field_, b.field_);
  return (a.promote(k) - b.promote(k)).is_zero();
}

std::string FieldElement::str() const {
  if (field_.depth() == 0 || in_base()) return coords_[0].str();
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coords_[i].str() + ")";
    if (i != 0) out += "*" + field_.basis_label(i);
  }
  return out;
}

nlohmann::json FieldElement::to_json() const {
  if (field_.depth() == 0) return coords_[0].str();
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i == 0 || !coords_[i].is_zero()) j[field_.basis_label(i)] = coords_[i].str();
  }
  return j;
}

FieldElement FieldElement::from_json(const FieldDescriptor& k, const nlohmann::json& j) {
  if (j.is_string()) return constant(k, Scalar::parse(j.get<std::string>(), k.prime()));
  if (j.is_number_integer()) return constant(k, Scalar(static_cast<long>(j.get<std::int64_t>())));
  if (!j.is_object()) throw ParseError("field element must be a string or coefficient map");
  FieldElement e = zero(k);
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool found = false;
    for (std::size_t i = 0; i < k.degree(); ++i) {
      if (k.basis_label(i) == it.key()) {
        e.coords_[i] = Scalar::parse(it.value().get<std::string>(), k.prime());
        found = true;
      }
    }
    if (!found) throw ParseError("unknown basis label '" + it.key() + "'");
  }
  return e;
}

// ---- free operations ----

std::variant<FieldDescriptor, AlreadySquare> adjoin_sqrt(const FieldDescriptor& K, const FieldElement& d,
                                                         std::string name, int embedding_sign) {
  FieldElement dk = d.promote(K);
  if (dk.is_zero()) throw MathError(ErrorKind::ZeroRadicand, "cannot adjoin sqrt(0)");
  if (auto w = is_square(K, dk)) return AlreadySquare{*w};
  if (K.depth() >= FieldDescriptor::kMaxDepth) {
    throw MathError(ErrorKind::TowerTooDeep, "towers are limited to 4 adjunctions");
  }
  if (K.sealed()) throw MathError(ErrorKind::NestedRadical, "a nested radical must be the last adjunction");
  return extend_tower(K, dk, std::move(name), embedding_sign);
}

TowerRoot sqrt_in_tower(const FieldDescriptor& K, const FieldElement& d, std::string name) {
  auto res = adjoin_sqrt(K, d, std::move(name));
  if (auto* w = std::get_if<AlreadySquare>(&res)) return TowerRoot{K, w->sqrt, false};
  FieldDescriptor L = std::get<FieldDescriptor>(res);
  return TowerRoot{L, FieldElement::root(L, L.depth() - 1), true};
}

std::optional<FieldElement> is_square(const FieldDescriptor& K, const FieldElement& a) {
  FieldElement ak = a.promote(common_field(K, a.field()));
  auto r = sqrt_rec(ak.field().node(), ak.coords());
  if (!r) return std::nullopt;
  return FieldElement(ak.field(), *r);
}

std::optional<FieldElement> is_square(const FieldElement& a) { return is_square(a.field(), a); }

Scalar trace_to_base(const FieldElement& a) {
  return a.coords()[0] * Scalar(static_cast<long>(a.field().degree()));
}

Scalar trace_to_base(const FieldDescriptor& L, const FieldElement& a) { return trace_to_base(a.promote(L)); }

Scalar norm_to_base(const FieldElement& a) {
  // Product over all sign patterns of the roots.
  FieldElement acc = FieldElement::one(a.field());
  for (std::size_t mask = 0; mask < a.field().degree(); ++mask) {
    FieldElement c = a;
    for (int j = 0; j < a.field().depth(); ++j) {
      if ((mask >> j & 1u) != 0) c = c.conjugate(j);
    }
    acc *= c;
  }
  // Conjugating lower roots inside nested radicands is not a field automorphism,
  // so this product is only used on towers with base radicands.
  return acc.base_value();
}

int sign_under_embedding(const FieldDescriptor& K, const FieldElement& a) {
  return sign_under_embedding(a.promote(common_field(K, a.field())));
}

int sign_under_embedding(const FieldElement& a) {
  const FieldDescriptor& K = a.field();
  if (K.prime() != 0 || !K.has_embedding()) {
    throw MathError(ErrorKind::NoEmbedding, "field " + K.str() + " has no real embedding");
  }
  if (a.is_zero()) return 0;
  if (K.depth() == 0) return a.coords()[0].sign();
  for (int bits = 32; bits <= (1 << 15); bits *= 2) {
    auto roots = root_intervals(K.node(), bits);
    if (!roots) continue;
    Interval v = ieval(K.node(), a.coords(), *roots);
    if (v.lo > 0) return +1;
    if (v.hi < 0) return -1;
  }
  throw MathError(ErrorKind::NoEmbedding, "sign refinement exceeded precision cap");
}

std::pair<double, double> real_enclosure(const FieldElement& a, int bits) {
  const FieldDescriptor& K = a.field();
  if (K.prime() != 0 || !K.has_embedding()) {
    throw MathError(ErrorKind::NoEmbedding, "field " + K.str() + " has no real embedding");
  }
  for (int b = bits; b <= (1 << 15); b *= 2) {
    auto roots = root_intervals(K.node(), b);
    if (!roots) continue;
    Interval v = ieval(K.node(), a.coords(), *roots);
    return {v.lo.get_d(), v.hi.get_d()};
  }
  throw MathError(ErrorKind::NoEmbedding, "enclosure failed");
}

}  // namespace apollo
