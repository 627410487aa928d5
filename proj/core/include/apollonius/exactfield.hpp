#pragma once

#include <cstdint>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "apollonius/errors.hpp"
#include "apollonius/scalar.hpp"

namespace apollo {

class FieldElement;
struct TowerNode;

// A tower k(sqrt d_1, ..., sqrt d_m) over k = Q or F_p, m <= 4.
//
// Elements are stored on the basis of square-free products of the adjoined
// roots; bit j of a basis index selects sqrt d_{j+1}. Radicands after the
// first non-base one are rejected, so a nested radical is always the last
// adjunction.
class FieldDescriptor {
 public:
  static constexpr int kMaxDepth = 4;

  FieldDescriptor();  // Q
  static FieldDescriptor rationals();
  static FieldDescriptor prime_field(std::int64_t p);

  std::int64_t prime() const;
  bool over_rationals() const { return prime() == 0; }
  int depth() const;
  std::size_t degree() const { return std::size_t{1} << depth(); }

  // Real embedding data: present for Q towers whose radicands are all positive.
  bool has_embedding() const;
  std::vector<int> embedding_signs() const;

  // True once a radicand outside the base field has been adjoined.
  bool sealed() const;

  FieldDescriptor base() const { return subtower(0); }
  FieldDescriptor subtower(int level) const;
  FieldElement radicand(int j) const;  // d_{j+1}, an element of subtower(j)
  const std::string& root_name(int j) const;
  std::string basis_label(std::size_t mask) const;

  // Structural comparisons.
  bool same_as(const FieldDescriptor& other) const;
  bool is_subtower_of(const FieldDescriptor& other) const;

  nlohmann::json to_json() const;
  std::string str() const;

  const TowerNode* node() const { return node_.get(); }

 private:
  friend FieldDescriptor extend_tower(const FieldDescriptor&, const FieldElement&, std::string, int);
  explicit FieldDescriptor(std::shared_ptr<const TowerNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TowerNode> node_;
};

inline bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) { return a.same_as(b); }
inline bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) { return !a.same_as(b); }

class FieldElement {
 public:
  FieldElement();  // 0 in Q
  FieldElement(long v);           // NOLINT(google-explicit-constructor)
  FieldElement(int v);            // NOLINT(google-explicit-constructor)
  FieldElement(const Scalar& s);  // NOLINT(google-explicit-constructor)
  FieldElement(FieldDescriptor field, std::vector<Scalar> coords);

  static FieldElement zero(const FieldDescriptor& k);
  static FieldElement one(const FieldDescriptor& k);
  static FieldElement constant(const FieldDescriptor& k, const Scalar& s);
  static FieldElement root(const FieldDescriptor& k, int j);  // sqrt d_{j+1}

  const FieldDescriptor& field() const { return field_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_one() const;
  bool in_base() const;  // all non-constant coordinates vanish
  Scalar base_value() const;

  // Re-expresses the element in a supertower (or returns it if already there).
  FieldElement promote(const FieldDescriptor& bigger) const;
  // Galois conjugate flipping the sign of sqrt d_{j+1}.
  FieldElement conjugate(int j) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement inv() const;
  FieldElement pow(long e) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string str() const;
  nlohmann::json to_json() const;
  static FieldElement from_json(const FieldDescriptor& k, const nlohmann::json& j);

 private:
  FieldDescriptor field_;
  std::vector<Scalar> coords_;
};

// Brings two elements into a common tower (one must be a subtower of the other).
FieldDescriptor common_field(const FieldDescriptor& a, const FieldDescriptor& b);

struct AlreadySquare {
  FieldElement sqrt;
};

// Extends K by sqrt d, or reports a witness square root when d is a square in K.
std::variant<FieldDescriptor, AlreadySquare> adjoin_sqrt(const FieldDescriptor& K, const FieldElement& d,
                                                         std::string name = {}, int embedding_sign = +1);

// Either the witness root in K, or the generator of the new extension.
struct TowerRoot {
  FieldDescriptor field;
  FieldElement root;
  bool adjoined = false;
};
TowerRoot sqrt_in_tower(const FieldDescriptor& K, const FieldElement& d, std::string name = {});

std::optional<FieldElement> is_square(const FieldElement& a);
std::optional<FieldElement> is_square(const FieldDescriptor& K, const FieldElement& a);

// Trace of multiplication-by-a down to the prime field.
Scalar trace_to_base(const FieldElement& a);
Scalar trace_to_base(const FieldDescriptor& L, const FieldElement& a);

// Norm down to the prime field.
Scalar norm_to_base(const FieldElement& a);

int sign_under_embedding(const FieldElement& a);
int sign_under_embedding(const FieldDescriptor& K, const FieldElement& a);

// Enclosure of a real element using dyadic root intervals with `bits` bits.
std::pair<double, double> real_enclosure(const FieldElement& a, int bits);

}  // namespace apollo
