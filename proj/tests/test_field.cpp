#include <gtest/gtest.h>

#include <random>

#include "matsuo/field.hpp"

using namespace matsuo;

TEST(Rational, Canonical) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_EQ((Rational(1, 3) + Rational(1, 6)).to_string(), "1/2");
}

TEST(Rational, Errors) {
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
  try {
    Rational::parse("1/x");
    FAIL();
  } catch (const DescriptorError& e) {
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ModP, InverseOfEveryUnit) {
  PrimeField f(13);
  for (int a = 1; a < 13; ++a) EXPECT_EQ(f.from_int(a) * f.from_int(a).inverse(), f.one());
  EXPECT_THROW(f.zero().inverse(), DivisionByZero);
}

TEST(ModP, Rationals) {
  PrimeField f(7);
  EXPECT_EQ(f.from_rational(Rational(1, 2)), f.from_int(4));
  EXPECT_EQ(f.from_rational(Rational(-3, 4)), f.from_int(1));
  EXPECT_THROW(f.from_rational(Rational(1, 7)), DivisionByZero);
}

TEST(ModP, MixedModuli) {
  EXPECT_THROW(PrimeField(7).one() + PrimeField(13).one(), MixedFields);
}

TEST(ModP, UnboundConstantsAdoptModulus) {
  PrimeField f(5);
  ModP x = ModP(3) + f.from_int(4);
  EXPECT_EQ(x, f.from_int(2));
  EXPECT_EQ(x.modulus(), 5u);
}

TEST(PrimeField, Squares) {
  PrimeField f13(13);
  auto r3 = f13.sqrt(f13.from_int(3));
  ASSERT_TRUE(r3);
  EXPECT_EQ(*r3 * *r3, f13.from_int(3));
  EXPECT_TRUE(*r3 == f13.from_int(4) || *r3 == f13.from_int(9));
  auto i = f13.sqrt(-f13.one());
  ASSERT_TRUE(i);
  EXPECT_EQ(*i * *i, -f13.one());
  PrimeField f7(7);
  EXPECT_FALSE(f7.sqrt(f7.from_int(3)));
  EXPECT_FALSE(f7.sqrt(-f7.one()));
}

TEST(PrimeField, Rejects) {
  EXPECT_THROW(PrimeField(2), BadCharacteristic);
  EXPECT_THROW(PrimeField(9), Error);
}

TEST(QuadraticField, Generator) {
  RationalSqrtField f(RationalField{}, Rational(3));
  auto g = f.generator();
  EXPECT_EQ(g * g, f.from_int(3));
  auto r = f.sqrt(f.from_int(3));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, f.from_int(3));
  EXPECT_EQ(to_string(f.make(Rational(2), Rational(1))), "2+1*sqrt3");
  EXPECT_FALSE(f.sqrt(f.from_int(2)));
}

TEST(QuadraticField, SquareRadicandRejected) {
  try {
    parse_field("Q(sqrt:4)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("drop the extension"), std::string::npos);
  }
  EXPECT_THROW(parse_field("Fp:13(sqrt:3)"), Error);
}

TEST(QuadraticField, OverPrimeField) {
  auto any = parse_field("Fp:7(sqrt:3)");
  auto& f = std::get<PrimeSqrtField>(any);
  EXPECT_EQ(f.generator() * f.generator(), f.from_int(3));
  EXPECT_EQ(f.characteristic(), 7u);
}

TEST(ParseField, Descriptors) {
  EXPECT_EQ(field_name(parse_field("Q")), "Q");
  EXPECT_EQ(field_name(parse_field("Fp:7")), "Fp:7");
  EXPECT_EQ(field_name(parse_field("F13")), "Fp:13");
  EXPECT_EQ(field_name(parse_field("Q(sqrt:3)")), "Q(sqrt:3)");
  EXPECT_EQ(field_name(parse_field("Fp:7(sqrt:3)")), "Fp:7(sqrt:3)");
}

TEST(ParseField, ErrorColumns) {
  try {
    parse_field("R");
    FAIL();
  } catch (const DescriptorError& e) {
    EXPECT_EQ(e.column(), 1u);
  }
  try {
    parse_field("Q(sqrt:3");
    FAIL();
  } catch (const DescriptorError& e) {
    EXPECT_GT(e.column(), 1u);
  }
}

// Field axioms on random elements of every descriptor kind.
template <class F>
void check_axioms(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 200; ++k) {
    auto a = f.random(rng);
    auto b = f.random(rng);
    auto c = f.random(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, f.zero());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), f.one());
  }
}

TEST(FieldProperty, Axioms) {
  check_axioms(RationalField{}, 1);
  check_axioms(PrimeField(13), 2);
  check_axioms(RationalSqrtField(RationalField{}, Rational(3)), 3);
  check_axioms(PrimeSqrtField(PrimeField(7), ModP(3, 7)), 4);
}
