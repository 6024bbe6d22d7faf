#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ore/ore.hpp"

using namespace ore;

namespace {

using F = SkewPoly<GaloisField>;
using M = DivMatrix<GaloisField>;

Context<GaloisField> f4_frobenius() { return Context<GaloisField>{GaloisField::f4({1, 0})}; }

template <SampleableRing R>
DivMatrix<R> random_matrix(const Context<R>& ctx, std::size_t n, std::mt19937_64& rng) {
  DivMatrix<R> m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ctx.random(rng);
  return m;
}

template <SampleableRing R>
void expect_inverse_entry_identity(const Context<R>& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int checked = 0;
  while (checked < 200) {
    auto a = random_matrix(ctx, 3, rng);
    auto inv = gauss_invert(a);
    if (!inv.inverse || !gauss_invert(a.minor(2, 2)).inverse) continue;
    ASSERT_EQ(*inv.inverse * a, DivMatrix<R>::identity(ctx, 3));
    ASSERT_EQ(a * *inv.inverse, DivMatrix<R>::identity(ctx, 3));
    ASSERT_EQ(quasideterminant(a, 2, 2), (*inv.inverse)(2, 2).inverse());
    ++checked;
  }
}

}  // namespace

TEST(Matrix, GaussInversion) {
  auto f4 = f4_frobenius();
  EXPECT_EQ(invert(M::identity(f4, 3)), M::identity(f4, 3));
  auto w = f4.parse("w");
  EXPECT_EQ(invert(M::diagonal(f4, {w})), M::diagonal(f4, {w.inverse()}));
  auto v = vandermonde(std::vector{f4.one(), w});
  EXPECT_EQ(v * invert(v), M::identity(f4, 2));

  auto singular = M::from_rows(f4, {{f4.one(), w}, {w, w * w}});
  auto res = gauss_invert(singular);
  ASSERT_FALSE(res.inverse);
  M row = M::from_rows(f4, {res.dependence});
  EXPECT_EQ(row * singular, M(f4, 1, 2));
  EXPECT_THROW(invert(singular), SingularMatrix);
}

TEST(Matrix, Quasideterminants) {
  Context<Quaternions> h{Quaternions{}};
  auto a = h.parse("i"), b = h.parse("1+j"), c = h.parse("k"), d = h.parse("2");
  auto m = DivMatrix<Quaternions>::from_rows(h, {{a, b}, {c, d}});
  EXPECT_EQ(quasideterminant(m, 1, 1), d - c * a.inverse() * b);
  EXPECT_EQ(quasideterminant(m, 0, 0), a - b * d.inverse() * c);
  EXPECT_EQ(quasideterminant(DivMatrix<Quaternions>::diagonal(h, {c}), 0, 0), c);
  expect_inverse_entry_identity(Context<GaloisField>{GaloisField::f8({1, 3})}, 31);
  expect_inverse_entry_identity(h, 32);
}

TEST(Matrix, VandermondeShapes) {
  auto f4 = f4_frobenius();
  auto w = f4.parse("w");
  EXPECT_EQ(vandermonde(std::vector{w}), M::identity(f4, 1));
  EXPECT_EQ(vandermonde(std::vector{f4.one(), w}), M::from_rows(f4, {{f4.one(), f4.one()}, {f4.one(), w}}));

  Context<Rationals> q{Rationals{}};
  auto v = vandermonde(std::vector{q.from_int(2), q.from_int(3), q.from_int(-1)});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Scalar<Rationals> power = q.one();
      for (std::size_t k = 0; k < i; ++k) power = power * v(1, j);
      EXPECT_EQ(v(i, j), power);
    }
}

TEST(Matrix, WronskianBridge) {
  Context<GaloisField> f8{GaloisField::f8({1, 3})};
  auto all = f8.elements();
  for (const auto& a : all)
    for (std::size_t j1 = 1; j1 < all.size(); ++j1)
      for (std::size_t j2 = 1; j2 < all.size(); ++j2) {
        std::vector us{all[j1], all[j2]};
        std::vector pts{sd_conjugate(a, us[0]), sd_conjugate(a, us[1])};
        ASSERT_EQ(vandermonde(pts) * M::diagonal(f8, us), wronskian(a, us));
      }
  auto f4 = f4_frobenius();
  auto w = f4.parse("w");
  EXPECT_EQ(wronskian(f4.one(), std::vector{w}), M::diagonal(f4, {w}));
  auto wr = wronskian(f4.one(), std::vector{f4.one(), w});
  EXPECT_EQ(wr(1, 1), apply_S(w));
}

TEST(Matrix, InverseVandermonde) {
  auto f4 = f4_frobenius();
  auto w = f4.parse("w");
  auto res = inverse_vandermonde_via_F(std::vector{f4.one(), w});
  EXPECT_EQ(res.g[0], F::linear(w));
  EXPECT_EQ(res.g[1], F::linear(f4.one()));
  EXPECT_EQ(res.pivots[0], w * w);
  EXPECT_EQ(res.pivots[1], w * w);
  auto v = vandermonde(std::vector{f4.one(), w});
  EXPECT_EQ(res.c * v, M::diagonal(f4, res.pivots));
  EXPECT_EQ(res.inverse * v, M::identity(f4, 2));

  auto one = inverse_vandermonde_via_F(std::vector{w});
  EXPECT_EQ(one.c, M::identity(f4, 1));
  EXPECT_EQ(one.inverse, M::identity(f4, 1));
  EXPECT_THROW(inverse_vandermonde_via_F(std::vector{w, w}), InvalidInput);

  Context<Quaternions> h{Quaternions{}};
  std::vector pts{h.parse("i"), h.parse("j"), h.parse("1+k")};
  auto hq = inverse_vandermonde_via_F(pts);
  EXPECT_EQ(quasideterminant(vandermonde(pts), 2, 2), hq.pivots[2]);
}

TEST(Matrix, CoefficientMatrixTimesVandermonde) {
  Context<GaloisField> f8{GaloisField::f8({1, 5})};
  std::mt19937_64 rng(41);
  for (int n = 0; n < 50; ++n) {
    auto a = random_matrix(f8, 3, rng);
    std::vector<Scalar<GaloisField>> pts, us;
    for (int k = 0; k < 3; ++k) pts.push_back(f8.random(rng));
    for (int k = 0; k < 3; ++k) us.push_back(f8.random(rng));
    auto x = f8.random(rng);
    auto av = a * vandermonde(pts);
    auto aw = a * wronskian(x, us);
    for (std::size_t i = 0; i < 3; ++i) {
      F fi(f8, a.row(i));
      for (std::size_t j = 0; j < 3; ++j) {
        ASSERT_EQ(av(i, j), eval(fi, pts[j]));
        ASSERT_EQ(aw(i, j), operator_apply(fi, x, us[j]));
      }
    }
  }
}

TEST(Matrix, LuDecomposition) {
  auto f4 = f4_frobenius();
  auto w = f4.parse("w");
  auto lu = lu_vandermonde(std::vector{f4.one(), w});
  EXPECT_EQ(lu.pivots[0], f4.one());
  EXPECT_EQ(lu.pivots[1], w * w);
  EXPECT_TRUE(lu.upper.is_upper_triangular());
  EXPECT_TRUE(lu.unit_upper);
  auto single = lu_vandermonde(std::vector{w});
  EXPECT_EQ(single.lower, M::identity(f4, 1));
  EXPECT_EQ(single.upper, M::identity(f4, 1));

  auto lw = lu_wronskian(f4.one(), std::vector{f4.one(), w});
  auto p1 = F::linear(sd_conjugate(f4.one(), f4.one()));
  EXPECT_EQ(lw.upper(1, 1), operator_apply(p1, f4.one(), w));
  EXPECT_EQ(lw.upper(0, 1), w);

  // dependent points still give an upper triangular product
  auto dep = lu_vandermonde(std::vector{w, w, f4.one()});
  EXPECT_TRUE(dep.upper.is_upper_triangular());
  EXPECT_TRUE(dep.pivots[1].is_zero());
  EXPECT_FALSE(dep.unit_upper);
}

TEST(Matrix, CompanionCheck) {
  auto f4 = f4_frobenius();
  auto w = f4.parse("w");
  EXPECT_TRUE(companion_check(F::parse(f4, "t^2+1"), std::vector{f4.one(), w}));
  EXPECT_FALSE(companion_check(F::linear(w) * F::linear(w), std::vector{w, w}));
  EXPECT_TRUE(companion_check(F::linear(w), std::vector{w}));
  EXPECT_THROW(companion_check(F::linear(w), std::vector{w, w}), InvalidInput);
}

TEST(Matrix, InvertibilityMatchesIndependenceOverF4) {
  for (auto twist : {GaloisTwist{0, 0}, GaloisTwist{1, 0}, GaloisTwist{1, 2}}) {
    Context<GaloisField> f4{GaloisField::f4(twist)};
    for (std::size_t n = 1; n <= 3; ++n)
      oracle::for_each_tuple<GaloisField>(f4, n, [&](const std::vector<Scalar<GaloisField>>& pts) {
        bool independent = oracle::p_independent(f4, pts);
        auto v = vandermonde(pts);
        ASSERT_EQ(gauss_invert(v).inverse.has_value(), independent);
        ASSERT_EQ(oracle::rows_independent(v), independent);
        ASSERT_EQ(pindep_test(pts).independent, independent);
      });
  }
}
