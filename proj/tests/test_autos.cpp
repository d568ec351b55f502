#include <gtest/gtest.h>

#include <random>

#include "matsuo/autos.hpp"

using namespace matsuo;

namespace {

const Rational kHalf(1, 2);
using RationalSqrt3 = RationalSqrtField::Element;

RationalSqrtField q3() { return RationalSqrtField(RationalField{}, Rational(3)); }

template <ExactField F>
MatsuoAlgebra<F> affine_matsuo(const std::string& type, const F& f) {
  return build_matsuo(parse_group("3W:" + type), f.from_rational(kHalf), f);
}

}  // namespace

TEST(ModelB, Dimensions) {
  PrimeField f(13);
  EXPECT_EQ(build_model_b(RootSystem::parse("A2"), f).dim(), 9);
  EXPECT_EQ(build_model_b(RootSystem::parse("A3"), f).dim(), 18);
  EXPECT_EQ(build_model_b(RootSystem::parse("D4"), f).dim(), 36);
}

TEST(ModelB, BilinearForm) {
  auto f = q3();
  auto b = build_model_b(RootSystem::parse("A3"), f);
  for (int r = 0; r < 6; ++r) {
    auto form = b.bilinear_form(r);
    EXPECT_EQ(form(0, 0), f.from_rational(Rational(9, 2)));
    EXPECT_EQ(form(1, 1), f.from_rational(Rational(9, 2)));
    EXPECT_TRUE(form(0, 1).is_zero());
  }
}

TEST(ModelB, ThetaHasOrderSix) {
  auto f = q3();
  auto b = build_model_b(RootSystem::parse("A2"), f);
  Block<RationalSqrt3> t3 = b.theta() * b.theta() * b.theta();
  EXPECT_EQ(t3(0, 0), -f.one());
  EXPECT_EQ(t3(1, 1), -f.one());
  EXPECT_TRUE(t3(0, 1).is_zero());
  EXPECT_TRUE(t3(1, 0).is_zero());
  Block<RationalSqrt3> prod = b.theta() * b.theta_inverse();
  EXPECT_EQ(prod(0, 0), f.one());
  EXPECT_TRUE(prod(1, 0).is_zero());
}

TEST(ModelB, ProductOfXs) {
  // x_a x_b = -3/4 theta(y_{a+b}) and theta(y) = (sqrt3/2) x + y/2.
  auto f = q3();
  auto rs = RootSystem::parse("A2");
  auto b = build_model_b(rs, f);
  int a = *rs.index_of(rs.simple_root(0));
  int c = *rs.index_of(rs.simple_root(1));
  int g = *rs.index_of(RootVector(rs.simple_root(0) + rs.simple_root(1)));
  auto prod = b.algebra().multiply(ModelB<RationalSqrtField>::x(a), ModelB<RationalSqrtField>::x(c));
  auto s3 = f.generator();
  EXPECT_EQ(prod[ModelB<RationalSqrtField>::x(g)], f.from_rational(Rational(-3, 8)) * s3);
  EXPECT_EQ(prod[ModelB<RationalSqrtField>::y(g)], f.from_rational(Rational(-3, 8)));
}

TEST(ModelB, OrthogonalBlocksAnnihilate) {
  PrimeField f(13);
  auto rs = RootSystem::parse("D4");
  auto b = build_model_b(rs, f);
  for (int a = 0; a < rs.num_positive(); ++a) {
    for (int c = 0; c < rs.num_positive(); ++c) {
      if (a == c || rs.pairing(a, c) != 0) continue;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) EXPECT_TRUE(b.algebra().product(3 * a + i, 3 * c + j).empty());
      }
    }
  }
}

TEST(ModelB, Preconditions) {
  EXPECT_THROW(build_model_b(RootSystem::parse("A2"), RationalField{}), NoSqrt3);
  EXPECT_THROW(build_model_b(RootSystem::parse("A2"), PrimeField(7)), NoSqrt3);
  EXPECT_THROW(build_model_b(RootSystem::parse("A2"), PrimeField(3)), BadCharacteristic);
}

TEST(ModelB, IsomorphismA2F13) {
  PrimeField f(13);
  auto b = build_model_b(RootSystem::parse("A2"), f);
  auto m = affine_matsuo("A2", f);
  auto phi = model_b_iso(b, m);
  EXPECT_TRUE(inverse(phi));
  EXPECT_FALSE(homomorphism_failure(b.algebra(), m.algebra(), phi));
}

TEST(ModelB, IsomorphismA3RationalSqrt3) {
  auto f = q3();
  auto b = build_model_b(RootSystem::parse("A3"), f);
  auto m = affine_matsuo("A3", f);
  auto phi = model_b_iso(b, m);
  for (int r = 0; r < 6; ++r) {
    Vector<RationalSqrt3> u = phi.col(3 * r);
    EXPECT_EQ(m.multiply(u, u), u);
  }
}

TEST(ModelB, IsomorphismRejectsWrongTarget) {
  PrimeField f(13);
  auto b = build_model_b(RootSystem::parse("A2"), f);
  EXPECT_THROW(model_b_iso(b, affine_matsuo("A3", f)), WrongFamily);
  auto eta = build_matsuo(parse_group("3W:A2"), f.from_rational(Rational(1, 3)), f);
  EXPECT_THROW(model_b_iso(b, eta), BadEta);
}

TEST(Torus, IdentityParameter) {
  PrimeField f(13);
  auto b = build_model_b(RootSystem::parse("A3"), f);
  TorusParam<ModP> t{{{f.one(), f.zero()}, {f.one(), f.zero()}, {f.one(), f.zero()}}};
  EXPECT_EQ(torus_automorphism(b, t), b.algebra().identity_map());
}

TEST(Torus, PythagoreanOverRationalSqrt3) {
  auto f = q3();
  auto b = build_model_b(RootSystem::parse("A2"), f);
  TorusParam<RationalSqrt3> t{{{f.from_rational(Rational(3, 5)), f.from_rational(Rational(4, 5))},
                               {f.one(), f.zero()}}};
  auto g = torus_automorphism(b, t);
  EXPECT_TRUE(is_automorphism(b.algebra(), g));
  // The non-simple root rotates by the product, here the first rotation.
  auto blocks = torus_blocks(b.roots(), f, t);
  EXPECT_EQ(blocks[2], blocks[0]);
}

TEST(Torus, CircleRelation) {
  PrimeField f(13);
  auto b = build_model_b(RootSystem::parse("A2"), f);
  TorusParam<ModP> t{{{f.from_int(2), f.one()}, {f.one(), f.zero()}}};
  EXPECT_THROW(torus_automorphism(b, t), CircleRelationViolated);
}

TEST(TorusProperty, RandomParametersGiveAutomorphisms) {
  PrimeField f(13);
  for (const char* type : {"A2", "A3", "D4"}) {
    auto rs = RootSystem::parse(type);
    auto b = build_model_b(rs, f);
    auto m = affine_matsuo(type, f);
    auto phi = model_b_iso(b, m);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
      auto t = random_torus_param(f, rs.rank(), rng);
      auto u = random_torus_param(f, rs.rank(), rng);
      auto g = torus_automorphism(b, t);
      EXPECT_TRUE(is_automorphism(b.algebra(), g)) << type;
      EXPECT_EQ(Matrix<ModP>(g * torus_automorphism(b, u)), torus_automorphism(b, compose(t, u)));
      EXPECT_TRUE(theta_commutes(b, t));
      auto pushed = pushforward(phi, g);
      EXPECT_TRUE(is_automorphism(m.algebra(), pushed));
      EXPECT_TRUE(fixes_vertical_sums(m, pushed));
    }
  }
}

TEST(Torus, GenericFixedSpace) {
  // (-3/5, 4/5) is a rotation of infinite order.
  auto f = q3();
  for (const char* type : {"A2", "A3"}) {
    auto rs = RootSystem::parse(type);
    auto b = build_model_b(rs, f);
    TorusParam<RationalSqrt3> t;
    for (int i = 0; i < rs.rank(); ++i) {
      t.cs.emplace_back(f.from_rational(Rational(-3, 5)), f.from_rational(Rational(4, 5)));
    }
    EXPECT_EQ(fixed_dimension(torus_automorphism(b, t), f.one()), rs.num_positive()) << type;
  }
}

TEST(Characters, AdditiveOverF13) {
  PrimeField f(13);
  for (const char* type : {"A2", "A3"}) {
    auto rs = RootSystem::parse(type);
    auto b = build_model_b(rs, f);
    std::mt19937_64 rng(3);
    std::vector<TorusParam<ModP>> samples;
    for (int k = 0; k < 10; ++k) samples.push_back(random_torus_param(f, rs.rank(), rng));
    auto rep = character_additivity_check(b, samples);
    EXPECT_TRUE(rep.pass()) << type;
  }
}

TEST(Characters, NeedSquareRootOfMinusOne) {
  auto b = build_model_b(RootSystem::parse("A2"), q3());
  EXPECT_THROW(character_additivity_check(b, {}), Error);
}

TEST(Section, RootAutomorphisms) {
  RationalField q;
  for (const char* type : {"A2", "A3", "D4"}) {
    auto rs = RootSystem::parse(type);
    auto m = affine_matsuo(type, q);
    EXPECT_EQ(root_automorphism(m, LatticeMap::Identity(rs.rank(), rs.rank())), m.algebra().identity_map());
    for (const auto& d : rs.diagram_automorphisms()) EXPECT_TRUE(is_automorphism(m.algebra(), root_automorphism(m, d)));
    for (int i = 0; i < rs.rank(); ++i) {
      EXPECT_TRUE(is_automorphism(m.algebra(), root_automorphism(m, rs.simple_reflection(i))));
    }
  }
}

TEST(Section, DiagramFlipOfA3) {
  RationalField q;
  auto rs = RootSystem::parse("A3");
  auto m = affine_matsuo("A3", q);
  LatticeMap flip = LatticeMap::Zero(3, 3);
  flip(0, 2) = flip(1, 1) = flip(2, 0) = 1;
  auto perm = root_automorphism_permutation(m.group(), flip);
  int a1 = *rs.index_of(rs.simple_root(0));
  int a3 = *rs.index_of(rs.simple_root(2));
  EXPECT_EQ(perm[3 * a1 + 1], 3 * a3 + 1);
  EXPECT_TRUE(is_automorphism(m.algebra(), root_automorphism(m, flip)));
}

TEST(Section, NegationSwapsSigns) {
  auto g = parse_group("3W:A2");
  auto perm = root_automorphism_permutation(g, LatticeMap(-LatticeMap::Identity(2, 2)));
  for (int r = 0; r < 3; ++r) {
    EXPECT_EQ(perm[3 * r], 3 * r);
    EXPECT_EQ(perm[3 * r + 1], 3 * r + 2);
    EXPECT_EQ(perm[3 * r + 2], 3 * r + 1);
  }
}

TEST(Section, RejectsNonRootMaps) {
  RationalField q;
  auto m = affine_matsuo("A2", q);
  EXPECT_THROW(root_automorphism(m, LatticeMap(2 * LatticeMap::Identity(2, 2))), NotRootAutomorphism);
  LatticeMap shear = LatticeMap::Identity(2, 2);
  shear(0, 1) = 1;
  EXPECT_THROW(root_automorphism(m, shear), NotRootAutomorphism);
  EXPECT_THROW(root_automorphism_permutation(parse_group("S4"), LatticeMap::Identity(2, 2)), WrongFamily);
}

TEST(ZeroSum, Dimension) {
  RationalField q;
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(zero_sum_dimension(n, q), n * (n - 1) / 2);
    if (n >= 3) EXPECT_EQ(build_zero_sum_jordan(n, q).dim(), zero_sum_dimension(n, q));
  }
}

TEST(ZeroSum, ProductsStayInside) {
  RationalField q;
  auto z = build_zero_sum_jordan(4, q);
  for (int a = 0; a < z.dim(); ++a) {
    for (int b = 0; b < z.dim(); ++b) {
      EXPECT_NO_THROW(z.coordinates(z.jordan(z.basis_matrix(a), z.basis_matrix(b))));
    }
  }
  Matrix<Rational> not_zero_sum = Matrix<Rational>::Identity(4, 4);
  EXPECT_THROW(z.coordinates(not_zero_sum), VerificationFailure);
}

TEST(ZeroSum, TranspositionImageIsIdempotent) {
  RationalField q;
  auto z = build_zero_sum_jordan(5, q);
  auto e = transposition_image(z, 0, 1);
  EXPECT_EQ(z.jordan(e, e), e);
}

TEST(ZeroSum, SymmetricModelIsomorphism) {
  RationalField q;
  for (int n = 3; n <= 6; ++n) {
    auto z = build_zero_sum_jordan(n, q);
    auto m = build_matsuo(build_symmetric(n), kHalf, q);
    EXPECT_NO_THROW(symmetric_model_iso(m, z)) << n;
  }
  PrimeField f(7);
  auto z = build_zero_sum_jordan(5, f);
  EXPECT_NO_THROW(symmetric_model_iso(build_matsuo(build_symmetric(5), f.from_rational(kHalf), f), z));
}

TEST(ZeroSum, Preconditions) {
  EXPECT_THROW(build_zero_sum_jordan(5, PrimeField(5)), BadCharacteristic);
  EXPECT_THROW(build_zero_sum_jordan(6, PrimeField(3)), BadCharacteristic);
  RationalField q;
  auto z = build_zero_sum_jordan(4, q);
  EXPECT_THROW(symmetric_model_iso(build_matsuo(build_symmetric(5), kHalf, q), z), WrongFamily);
}
