#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "ore/ore.hpp"

using namespace ore;

namespace {

using F = SkewPoly<GaloisField>;

Context<GaloisField> f4_frobenius() { return Context<GaloisField>{GaloisField::f4({1, 0})}; }

}  // namespace

TEST(Symmetric, TwoPointFunctions) {
  Context<GaloisField> f8{GaloisField::f8({1, 3})};
  auto all = f8.elements();
  for (const auto& x1 : all)
    for (const auto& x2 : all) {
      if (x1 == x2) continue;
      auto trace = llcm_set(std::vector{x1, x2});
      auto table = symmetric_functions(trace);
      Scalar<GaloisField> y = sd_conjugate(x1, x1 - x2);
      // the trace adds x_2 after x_1, so swap the roles
      auto rev = symmetric_functions(llcm_set(std::vector{x2, x1}));
      EXPECT_EQ(rev.lambda[2][1], y + apply_S(x2));
      EXPECT_EQ(rev.lambda[2][2], y * x2 - apply_D(x2));
      EXPECT_EQ(table.lambda[2], rev.lambda[2]);
    }
}

TEST(Symmetric, ClassicalTopCoefficientIsProduct) {
  Context<Quaternions> h{Quaternions{}};
  std::vector points{h.parse("i"), h.parse("j"), h.parse("1+k"), h.parse("2-i+j")};
  auto trace = llcm_set(points);
  ASSERT_TRUE(trace.independent());
  auto table = symmetric_functions(trace);
  Scalar<Quaternions> product = h.one();
  for (const auto& y : trace.roots()) product = y * product;
  EXPECT_EQ(table.lambda[4][4], product);
  EXPECT_EQ(table.lambda[1][1], trace.roots()[0]);
  EXPECT_TRUE(viete_check(trace));
}

TEST(Symmetric, VieteAndPermutationInvarianceOverF8) {
  Context<GaloisField> f8{GaloisField::f8({1, 5})};
  auto all = f8.elements();
  std::mt19937_64 rng(4);
  for (int n = 0; n < 60; ++n) {
    std::vector<Scalar<GaloisField>> pts;
    for (int k = 0; k < 3; ++k) pts.push_back(all[rng() % all.size()]);
    auto trace = llcm_set(pts);
    if (!trace.independent()) continue;
    EXPECT_TRUE(viete_check(trace));
    std::vector<std::size_t> perm{0, 1, 2};
    do {
      std::vector<Scalar<GaloisField>> permuted;
      for (auto k : perm) permuted.push_back(pts[k]);
      EXPECT_EQ(llcm_set(permuted).result(), trace.result());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(Symmetric, DegenerateTraceRejected) {
  auto f4 = f4_frobenius();
  auto trace = llcm_set(std::vector{f4.one(), f4.one()});
  EXPECT_THROW(symmetric_functions(trace), DegenerateTrace);
  EXPECT_THROW(bezout_eval(trace, f4.parse("w")), DegenerateTrace);
}

TEST(Symmetric, BezoutOverF16) {
  Context<GaloisField> f16{GaloisField::f16({1, 0})};
  // 1 and an element of order 3 generate the subfield F_4 inside F_16
  auto all = f16.elements();
  Scalar<GaloisField> omega = f16.zero();
  for (const auto& x : all)
    if (!x.is_zero() && !(x == f16.one()) && x * x * x == f16.one()) omega = x;
  auto trace = llcm_set(std::vector{f16.one(), omega});
  ASSERT_TRUE(trace.independent());
  int checked = 0;
  for (const auto& z : all) {
    bool chain_ok = true;
    for (std::size_t i = 0; i < trace.size(); ++i)
      if (eval(trace.partials[i], z).is_zero()) chain_ok = false;
    if (!chain_ok) {
      EXPECT_THROW(bezout_eval(trace, z), BezoutChainBroken);
      continue;
    }
    auto res = bezout_eval(trace, z);
    EXPECT_EQ(res.value, eval(trace.result(), z));
    EXPECT_EQ(res.factors.size(), 2u);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Symmetric, BezoutQuaternions) {
  Context<Quaternions> h{Quaternions{}};
  auto trace = llcm_set(std::vector{h.parse("i"), h.parse("j")});
  std::mt19937_64 rng(12);
  for (int n = 0; n < 100; ++n) {
    auto z = h.random(rng);
    if (eval(trace.partials[1], z).is_zero()) continue;
    EXPECT_EQ(bezout_eval(trace, z).value, eval(trace.result(), z));
  }
  auto one = llcm_set(std::vector{h.parse("k")});
  auto z = h.parse("1+i");
  EXPECT_EQ(bezout_eval(one, z).value, z - h.parse("k"));
}

TEST(Symmetric, MiuraFactorization) {
  auto f4 = f4_frobenius();
  auto a = f4.one();
  std::vector us{f4.one(), f4.parse("w")};
  std::vector<Scalar<GaloisField>> pts;
  for (const auto& u : us) pts.push_back(sd_conjugate(a, u));
  auto trace = llcm_set(pts);
  EXPECT_TRUE(miura_check(trace, a, us, f4.elements()));
  for (const auto& x : f4.elements()) EXPECT_TRUE(operator_apply(trace.result(), a, x).is_zero());

  Context<Quaternions> h{Quaternions{}};
  auto ai = h.parse("i");
  std::vector hus{h.one(), h.parse("1+j")};
  std::vector<Scalar<Quaternions>> hpts;
  for (const auto& u : hus) hpts.push_back(sd_conjugate(ai, u));
  std::mt19937_64 rng(13);
  std::vector<Scalar<Quaternions>> samples;
  for (int n = 0; n < 100; ++n) samples.push_back(h.random(rng));
  EXPECT_TRUE(miura_check(llcm_set(hpts), ai, hus, samples));

  auto single = llcm_set(std::vector{sd_conjugate(ai, hus[1])});
  EXPECT_TRUE(operator_apply(single.result(), ai, hus[1]).is_zero());
}

TEST(Symmetric, PindepExamples) {
  auto f4 = f4_frobenius();
  auto w = f4.parse("w");
  auto res = pindep_test(std::vector{f4.one(), w});
  EXPECT_TRUE(res.independent);
  EXPECT_EQ(res.u(0, 0), f4.one());
  EXPECT_EQ(res.u(0, 1), f4.one());
  EXPECT_EQ(res.u(1, 1), w * w);
  ASSERT_TRUE(res.llcm);
  EXPECT_EQ(*res.llcm, F::parse(f4, "t^2+1"));
  EXPECT_FALSE(pindep_test(std::vector{w, w}).independent);
}

TEST(Symmetric, QuadraticRelations) {
  Context<Quaternions> h{Quaternions{}};
  std::vector hpts{h.parse("i"), h.parse("1+j")};
  EXPECT_TRUE(quadratic_relations_check(hpts, {}, 0, 1));
  EXPECT_THROW(quadratic_relations_check(hpts, {}, 0, 0), InvalidInput);

  Context<GaloisField> f8{GaloisField::f8({1, 3})};
  int checked = 0;
  oracle::for_each_tuple<GaloisField>(f8, 3, [&](const std::vector<Scalar<GaloisField>>& pts) {
    if (!llcm_set(pts).independent()) return;
    for (std::size_t a = 0; a < 3; ++a) {
      std::size_t i = (a + 1) % 3, j = (a + 2) % 3;
      ASSERT_TRUE(quadratic_relations_check(pts, {a}, i, j));
      ++checked;
    }
  });
  EXPECT_GT(checked, 0);
}
