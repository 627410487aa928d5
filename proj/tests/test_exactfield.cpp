#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "apollonius/errors.hpp"
#include "apollonius/exactfield.hpp"
#include "apollonius/scalar.hpp"
#include "support.hpp"

using namespace apollo;
using apollo::testing::q;

namespace {

FieldDescriptor tower(const FieldDescriptor& k, long d) {
  return sqrt_in_tower(k, FieldElement::constant(k, Scalar(d))).field;
}

FieldElement random_element(const FieldDescriptor& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < k.degree(); ++i) {
    const Scalar s = k.over_rationals() ? Scalar(mpq_class(num(rng), den(rng))) : Scalar::mod(num(rng), k.prime());
    c.push_back(s);
  }
  return FieldElement(k, c);
}

}  // namespace

TEST(Scalar, RationalArithmetic) {
  EXPECT_EQ(Scalar::parse("3/4") + Scalar::parse("1/4"), Scalar(1));
  EXPECT_EQ(Scalar::parse("-6/8").str(), "-3/4");
  EXPECT_EQ(Scalar::parse("9/4").sqrt()->str(), "3/2");
  EXPECT_FALSE(Scalar(2).sqrt().has_value());
  EXPECT_EQ(Scalar(-5).sign(), -1);
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Scalar a = Scalar::mod(3, 7);
  EXPECT_EQ((a * a.inv()).residue(), 1);
  EXPECT_EQ(Scalar::mod(-1, 7).residue(), 6);
  EXPECT_EQ((a + Scalar(5)).residue(), 1);  // integer literal reduces mod 7
  EXPECT_EQ(Scalar::mod(2, 7).sqrt()->residue(), 3);
  EXPECT_FALSE(Scalar::mod(3, 7).sqrt().has_value());
  EXPECT_EQ(Scalar::parse("1/2", 7).residue(), 4);
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW((void)Scalar(0).inv(), MathError);
  EXPECT_THROW((void)Scalar::mod(7, 7).inv(), MathError);
}

TEST(Scalar, MalformedTextThrowsParseError) {
  EXPECT_THROW(Scalar::parse("1/0"), std::exception);
  EXPECT_THROW(Scalar::parse("abc"), ParseError);
}

TEST(Tower, AdjoinAndSquare) {
  const FieldDescriptor k = tower(FieldDescriptor::rationals(), 2);
  EXPECT_EQ(k.depth(), 1);
  const FieldElement r = FieldElement::root(k, 0);
  EXPECT_EQ(r * r, FieldElement::constant(k, Scalar(2)));
  EXPECT_TRUE(is_square(k, FieldElement::constant(k, Scalar(8))).has_value());
  EXPECT_FALSE(is_square(k, FieldElement::constant(k, Scalar(3))).has_value());
}

TEST(Tower, SquareInBaseGivesWitness) {
  const auto res = adjoin_sqrt(FieldDescriptor::rationals(), q("49/4"));
  ASSERT_TRUE(std::holds_alternative<AlreadySquare>(res));
  EXPECT_EQ(std::get<AlreadySquare>(res).sqrt * std::get<AlreadySquare>(res).sqrt, q("49/4"));
}

TEST(Tower, ZeroRadicandRejected) {
  try {
    (void)adjoin_sqrt(FieldDescriptor::rationals(), q("0"));
    FAIL() << "expected ZeroRadicand";
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroRadicand);
  }
}

TEST(Tower, DepthLimit) {
  FieldDescriptor k = FieldDescriptor::rationals();
  for (long d : {2, 3, 5, 7}) k = tower(k, d);
  EXPECT_EQ(k.depth(), 4);
  EXPECT_EQ(k.degree(), 16u);
  EXPECT_THROW((void)adjoin_sqrt(k, FieldElement::constant(k, Scalar(11))), MathError);
}

TEST(Tower, TraceAndNorm) {
  const FieldDescriptor k = tower(tower(FieldDescriptor::rationals(), 2), 3);
  const FieldElement s2 = FieldElement::root(k, 0);
  const FieldElement s3 = FieldElement::root(k, 1);
  const FieldElement x = FieldElement::constant(k, Scalar(1)) + s2 + s3;
  EXPECT_EQ(trace_to_base(x), Scalar(4));
  // N(1 + sqrt2 + sqrt3) over Q = -8.
  EXPECT_EQ(norm_to_base(x), Scalar(-8));
  EXPECT_EQ(trace_to_base(s2 * s3), Scalar(0));
}

TEST(Tower, RealEmbeddingSign) {
  const FieldDescriptor k = tower(FieldDescriptor::rationals(), 2);
  const FieldElement r = FieldElement::root(k, 0);
  EXPECT_EQ(sign_under_embedding(r - FieldElement::constant(k, Scalar::parse("141421/100000"))), 1);
  EXPECT_EQ(sign_under_embedding(r - FieldElement::constant(k, Scalar::parse("141422/100000"))), -1);
  const auto [lo, hi] = real_enclosure(r, 40);
  EXPECT_LE(lo, std::sqrt(2.0) + 1e-15);
  EXPECT_GE(hi, std::sqrt(2.0) - 1e-15);
  EXPECT_LT(hi - lo, 1e-9);
}

TEST(Tower, PrimeFieldNonResidue) {
  const FieldDescriptor f7 = FieldDescriptor::prime_field(7);
  const TowerRoot r = sqrt_in_tower(f7, FieldElement::constant(f7, Scalar::mod(3, 7)));
  EXPECT_TRUE(r.adjoined);
  EXPECT_EQ(r.root * r.root, FieldElement::constant(r.field, Scalar::mod(3, 7)));
  EXPECT_FALSE(r.field.has_embedding());
}

TEST(Tower, JsonRoundTrip) {
  const FieldDescriptor k = tower(FieldDescriptor::rationals(), 5);
  const FieldElement x = FieldElement::constant(k, Scalar::parse("2/3")) + FieldElement::root(k, 0);
  EXPECT_EQ(FieldElement::from_json(k, x.to_json()), x);
}

class TowerProperties : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(TowerProperties, FieldAxiomsAndGaloisAction) {
  const std::int64_t p = GetParam();
  const FieldDescriptor base = p == 0 ? FieldDescriptor::rationals() : FieldDescriptor::prime_field(p);
  // F_p has a single quadratic extension, so sqrt 5 lies in F_13(sqrt 2).
  const FieldDescriptor k = tower(tower(base, 2), 5);
  ASSERT_EQ(k.depth(), p == 0 ? 2 : 1);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldElement a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
    for (int j = 0; j < 2; ++j) {
      EXPECT_EQ((a * b).conjugate(j), a.conjugate(j) * b.conjugate(j));
      EXPECT_EQ(a.conjugate(j).conjugate(j), a);
    }
    EXPECT_EQ(norm_to_base(a * b), norm_to_base(a) * norm_to_base(b));
    EXPECT_EQ(trace_to_base(a + b), trace_to_base(a) + trace_to_base(b));
    const FieldElement sq = a * a;
    if (!a.is_zero()) {
      const auto root = is_square(k, sq);
      ASSERT_TRUE(root.has_value());
      EXPECT_EQ(*root * *root, sq);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(QandFp, TowerProperties, ::testing::Values(0, 13));
