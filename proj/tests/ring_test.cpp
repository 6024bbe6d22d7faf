#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ore/ore.hpp"

using namespace ore;

namespace {

Context<GaloisField> f4_frobenius() { return Context<GaloisField>{GaloisField::f4({1, 0})}; }

template <SampleableRing R>
void expect_twist_laws(const Context<R>& ctx, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int n = 0; n < samples; ++n) {
    auto a = ctx.random(rng);
    auto b = ctx.random(rng);
    ASSERT_EQ(apply_D(a * b), apply_S(a) * apply_D(b) + apply_D(a) * b) << a << ", " << b;
    ASSERT_EQ(apply_S(a * b), apply_S(a) * apply_S(b));
    ASSERT_EQ(apply_S(a + b), apply_S(a) + apply_S(b));
    ASSERT_EQ(apply_D(a + b), apply_D(a) + apply_D(b));
  }
}

}  // namespace

TEST(GaloisField, DefiningRelations) {
  Context<GaloisField> f4{GaloisField::f4()};
  auto w = f4.parse("w");
  EXPECT_EQ(w * (w * w), f4.one());
  EXPECT_EQ(w * w + w + f4.one(), f4.zero());
  EXPECT_EQ(w.inverse(), w * w);
  EXPECT_EQ(f4.one().inverse(), f4.one());
  EXPECT_FALSE(f4.zero().try_inverse());
}

TEST(GaloisField, FieldAxiomsExhaustive) {
  for (auto field : {GaloisField::f4(), GaloisField::f8(), GaloisField::f9()}) {
    Context<GaloisField> ctx{field};
    auto all = ctx.elements();
    for (const auto& a : all) {
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), ctx.one());
        EXPECT_EQ(a.inverse().inverse(), a);
      }
      for (const auto& b : all) {
        EXPECT_EQ(a * b, b * a);
        for (const auto& c : all) EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST(GaloisField, FrobeniusAndInnerDerivation) {
  auto f4 = f4_frobenius();
  auto w = f4.parse("w");
  EXPECT_EQ(apply_S(w), w * w);
  EXPECT_EQ(pseudo_linear_apply(f4.one(), w), w * w);
  Context<GaloisField> f8{GaloisField::f8({1, 2})};
  auto beta = f8.parse("w");
  for (const auto& a : f8.elements()) EXPECT_EQ(apply_D(a), beta * a - apply_S(a) * beta);
}

TEST(GaloisField, RejectsReducibleModulus) {
  EXPECT_THROW(GaloisField::create(2, {1, 0, 1}), InvalidInput);
  EXPECT_NO_THROW(GaloisField::create(3, {2, 2, 1}));
}

TEST(Twist, SDerivationLawThousandPairs) {
  expect_twist_laws(Context<GaloisField>{GaloisField::f8({1, 3})}, 1000, 1);
  expect_twist_laws(Context<GaloisField>{GaloisField::f16({2, 7})}, 1000, 2);
  expect_twist_laws(Context<GaloisField>{GaloisField::f9({1, 4})}, 1000, 3);
  RationalFunctions::Twist ddx;
  ddx.ddx = true;
  expect_twist_laws(Context<RationalFunctions>{RationalFunctions(ddx)}, 1000, 4);
  Context<RationalFunctions> plain{RationalFunctions{}};
  RationalFunctions::Twist subst;
  subst.substitution = plain.parse("x^2+1").value();
  subst.inner_beta = plain.parse("x").value();
  expect_twist_laws(Context<RationalFunctions>{RationalFunctions(subst)}, 1000, 5);
  Quaternions::Twist inner;
  inner.inner_q = Quaternions::make(1, 1, 0, 2);
  inner.inner_beta = Quaternions::make(0, 1, 1, 0);
  expect_twist_laws(Context<Quaternions>{Quaternions(inner)}, 1000, 6);
}

TEST(Quaternions, Arithmetic) {
  Context<Quaternions> h{Quaternions{}};
  auto i = h.parse("i"), j = h.parse("j"), k = h.parse("k");
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, h.from_int(-1));
  EXPECT_EQ((i - j).inverse(), h.parse("-1/2*i+1/2*j"));
  EXPECT_EQ(sd_conjugate(i, i - j), -j);
  EXPECT_EQ(sd_conjugate(i, h.one()), i);
}

TEST(Quaternions, InverseIsInvolution) {
  Context<Quaternions> h{Quaternions{}};
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    auto a = h.random(rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(a.inverse().inverse(), a);
    EXPECT_EQ(a * a.inverse(), h.one());
  }
}

TEST(RationalFunctions, DerivativeAndSubstitution) {
  RationalFunctions::Twist ddx;
  ddx.ddx = true;
  Context<RationalFunctions> q{RationalFunctions(ddx)};
  EXPECT_EQ(apply_D(q.parse("x^2")), q.parse("2x"));
  EXPECT_EQ(apply_D(q.parse("1/x")), q.parse("-1/x^2"));
  EXPECT_EQ(pseudo_linear_apply(q.zero(), q.parse("x^2")), q.parse("2x"));
  Context<RationalFunctions> plain{RationalFunctions{}};
  RationalFunctions::Twist subst;
  subst.substitution = plain.parse("x^2").value();
  Context<RationalFunctions> s{RationalFunctions(subst)};
  EXPECT_EQ(apply_S(s.parse("(x+1)/(x-1)")), s.parse("(x^2+1)/(x^2-1)"));
  EXPECT_EQ(s.parse("(2x+2)/(4x^2-4)"), s.parse("1/(2x-2)"));
}

TEST(Rationals, Arithmetic) {
  Context<Rationals> q{Rationals{}};
  EXPECT_EQ(q.parse("1/2") + q.parse("1/3"), q.parse("5/6"));
  EXPECT_EQ(q.parse("-4/6").str(), "-2/3");
}

TEST(InnerDerivation, IdentityTwist) {
  Quaternions::Twist t;
  t.inner_beta = Quaternions::make(0, 0, 1, 0);
  Context<Quaternions> h{Quaternions(t)};
  auto beta = h.parse("j");
  std::mt19937_64 rng(9);
  for (int n = 0; n < 50; ++n) {
    auto a = h.random(rng);
    EXPECT_EQ(apply_D(a), beta * a - a * beta);
  }
}

TEST(Conjugation, CompositionLaw) {
  Context<GaloisField> f16{GaloisField::f16({1, 5})};
  auto all = f16.elements();
  for (const auto& a : all)
    for (std::size_t c = 1; c < all.size(); c += 3)
      for (std::size_t d = 2; d < all.size(); d += 5)
        EXPECT_EQ(sd_conjugate(sd_conjugate(a, all[c]), all[d]), sd_conjugate(a, all[d] * all[c]));
  Quaternions::Twist t;
  t.inner_q = Quaternions::make(1, 2, 0, 1);
  Context<Quaternions> h{Quaternions(t)};
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    auto a = h.random(rng), c = h.random(rng), d = h.random(rng);
    if (c.is_zero() || d.is_zero()) continue;
    EXPECT_EQ(sd_conjugate(sd_conjugate(a, c), d), sd_conjugate(a, d * c));
  }
}

TEST(Centralizer, MatchesExhaustiveSearch) {
  for (auto twist : {GaloisTwist{0, 0}, GaloisTwist{1, 0}, GaloisTwist{1, 3}, GaloisTwist{2, 5}}) {
    Context<GaloisField> f8{GaloisField::f8(twist)};
    for (const auto& a : f8.elements()) {
      auto brute = oracle::centralizer(a);
      auto basis = centralizer_basis(a);
      EXPECT_EQ(std::size_t{1} << basis.size(), brute.size());
      for (const auto& x : brute) EXPECT_TRUE(x.is_zero() || is_in_centralizer(a, x));
    }
  }
  auto f4 = f4_frobenius();
  auto basis = centralizer_basis(f4.one());
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], f4.one());
}

TEST(Conjugacy, MatchesOrbits) {
  Context<GaloisField> f8{GaloisField::f8({1, 6})};
  auto all = f8.elements();
  for (const auto& a : all)
    for (const auto& b : all) {
      bool brute = false;
      for (const auto& x : all)
        if (!x.is_zero() && sd_conjugate(a, x) == b) brute = true;
      EXPECT_EQ(are_conjugate(a, b), brute) << a << " ~ " << b;
      if (auto x = conjugator(a, b)) {
        EXPECT_EQ(sd_conjugate(a, *x), b);
      }
    }
  Context<Quaternions> h{Quaternions{}};
  EXPECT_TRUE(are_conjugate(h.parse("i"), h.parse("3/5*j+4/5*k")));
  EXPECT_FALSE(are_conjugate(h.parse("i"), h.parse("2i")));
  EXPECT_FALSE(are_conjugate(h.parse("1"), h.parse("i")));
}

TEST(IntegersMod, UnitsAndZeroDivisors) {
  Context<IntegersMod> z8{IntegersMod(8)};
  EXPECT_EQ(z8.from_int(3).inverse(), z8.from_int(3));
  EXPECT_FALSE(z8.from_int(2).try_inverse());
  EXPECT_EQ(z8.from_int(-1), z8.from_int(7));
  EXPECT_EQ(z8.elements().size(), 8u);
}

TEST(MatrixRing, ProductsAndInverses) {
  Context<MatrixRing<Rationals>> m2{MatrixRing<Rationals>(Rationals{}, 2)};
  auto a = m2.parse("[[1,1],[0,1]]");
  EXPECT_EQ(a.inverse(), m2.parse("[[1,-1],[0,1]]"));
  EXPECT_FALSE(m2.parse("[[1,1],[1,1]]").try_inverse());
  EXPECT_EQ(m2.parse("[[0,1],[0,0]]") * m2.parse("[[0,0],[1,0]]"), m2.parse("[[1,0],[0,0]]"));
  Context<MatrixRing<IntegersMod>> f2{MatrixRing<IntegersMod>(IntegersMod(2), 2)};
  EXPECT_EQ(f2.elements().size(), 16u);
  int units = 0;
  for (const auto& e : f2.elements())
    if (e.try_inverse()) ++units;
  EXPECT_EQ(units, 6);  // |GL_2(F_2)|
}

TEST(TriangularRing, EmbeddedFunctions) {
  Context<TriangularRing> t{TriangularRing{}};
  auto a = t.parse("[[x^2,x^2],[0,x]]");
  EXPECT_EQ(a * a.inverse(), t.one());
  EXPECT_EQ(a.inverse() * a, t.one());
  EXPECT_THROW(t.parse("[[x,0],[0,x]]"), ParseError);
}
