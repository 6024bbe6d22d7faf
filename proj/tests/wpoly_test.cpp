#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ore/ore.hpp"

using namespace ore;

namespace {

using F = SkewPoly<GaloisField>;

Context<GaloisField> f4_frobenius() { return Context<GaloisField>{GaloisField::f4({1, 0})}; }

std::vector<std::vector<std::string>> printed(const std::vector<Factorization<GaloisField>>& facs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : facs) out.push_back(f.printed());
  return out;
}

}  // namespace

TEST(WPoly, RootsAndClasses) {
  auto f4 = f4_frobenius();
  auto f = F::parse(f4, "t^2+1");
  auto roots = root_set(f);
  EXPECT_EQ(roots.size(), 3u);
  auto classes = class_decomposition(f, roots);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].roots.size(), 3u);
  EXPECT_EQ(root_set(F::linear(f4.parse("w"))).size(), 1u);

  Context<GaloisField> plain{GaloisField::f8()};
  auto g = F::linear(plain.parse("w")) * F::linear(plain.parse("w+1"));
  EXPECT_EQ(class_decomposition(g, root_set(g)).size(), root_set(g).size());

  Context<Quaternions> h{Quaternions{}};
  using H = SkewPoly<Quaternions>;
  auto hf = H::parse(h, "t^2+1");
  std::vector<Scalar<Quaternions>> cands;
  for (const char* s : {"i", "-i", "j", "-j", "k", "-k", "1", "1+i"}) cands.push_back(h.parse(s));
  auto hroots = root_set(hf, std::optional(cands));
  EXPECT_EQ(hroots.size(), 6u);
  EXPECT_EQ(class_decomposition(hf, hroots).size(), 1u);
  EXPECT_THROW(root_set(hf), InvalidInput);
}

TEST(WPoly, ExponentSpaces) {
  auto f4 = f4_frobenius();
  auto e = exponent_space(F::parse(f4, "t^2+1"), f4.one());
  EXPECT_EQ(e.dim, 2u);
  EXPECT_EQ(e.exponents->dim(), 2u);
  EXPECT_EQ(e.centralizer_order, 2u);
  auto w = f4.parse("w");
  auto lin = exponent_space(F::linear(w), w);
  EXPECT_EQ(lin.dim, 1u);
  EXPECT_EQ(*lin.exponents, *lin.centralizer);

  Context<GaloisField> plain{GaloisField::f4()};
  auto none = exponent_space(F::linear(plain.one()), plain.parse("w"));
  EXPECT_EQ(none.dim, 0u);
}

TEST(WPoly, WeightVerdicts) {
  auto f4 = f4_frobenius();
  auto r = is_w_polynomial(F::parse(f4, "t^2+1"));
  EXPECT_TRUE(r.is_wedderburn);
  EXPECT_EQ(r.weight, 2u);
  auto sq = is_w_polynomial(F::parse(f4, "t^2"));
  EXPECT_FALSE(sq.is_wedderburn);
  EXPECT_EQ(sq.weight, 1u);
  EXPECT_TRUE(is_w_polynomial(F::linear(f4.parse("w"))).is_wedderburn);
  EXPECT_THROW(is_w_polynomial(F::parse(f4, "(w)*t")), InvalidInput);
}

TEST(WPoly, ExponentDimensionBoundedByDegree) {
  auto f4 = f4_frobenius();
  for (int d = 1; d <= 3; ++d)
    for (const auto& f : oracle::monic_polys(f4, d))
      for (const auto& a : f4.elements()) EXPECT_LE(static_cast<int>(exponent_space(f, a).dim), d);
}

TEST(WPoly, KernelOfLlcmIsSpanOfExponents) {
  Context<GaloisField> f16{GaloisField::f16({2, 0})};
  auto all = f16.elements();
  for (const auto& a : {all[1], all[6]}) {
    auto c = oracle::centralizer(a);
    for (std::size_t j1 = 1; j1 < all.size(); j1 += 4)
      for (std::size_t j2 = 2; j2 < all.size(); j2 += 3) {
        std::vector us{all[j1], all[j2]};
        if (!oracle::right_independent(us, c)) continue;
        auto p = llcm_set(std::vector{sd_conjugate(a, us[0]), sd_conjugate(a, us[1])}).result();
        std::set<std::string> kernel, span;
        for (const auto& x : all)
          if (operator_apply(p, a, x).is_zero()) kernel.insert(x.str());
        for (const auto& c1 : c)
          for (const auto& c2 : c) span.insert((us[0] * c1 + us[1] * c2).str());
        EXPECT_EQ(kernel, span);
      }
  }
}

TEST(WPoly, FactorizationsOfTSquaredPlusOne) {
  auto f4 = f4_frobenius();
  auto f = F::parse(f4, "t^2+1");
  auto facs = enumerate_factorizations(f);
  EXPECT_EQ(facs.size(), 3u);
  EXPECT_EQ(printed(facs), oracle::factorizations(f));
  for (const auto& fac : facs) EXPECT_EQ(fac.product(f4), f);
  EXPECT_EQ(printed(enumerate_factorizations(f, 2)), printed(facs));

  auto w = f4.parse("w");
  auto one = enumerate_factorizations(F::linear(w));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].roots[0], w);
  EXPECT_THROW(enumerate_factorizations(F::parse(f4, "t^2")), InvalidInput);
}

TEST(WPoly, FlagRoundTrip) {
  auto f4 = f4_frobenius();
  auto f = F::parse(f4, "t^2+1");
  auto report = is_w_polynomial(f);
  std::vector<FlagChain> flags;
  for (const auto& fac : enumerate_factorizations(f)) {
    auto flag = flag_from_factorization(f, report.classes, fac);
    EXPECT_EQ(flag.weights, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(factorization_from_flag(f, report.classes, flag), fac);
    for (const auto& other : flags) EXPECT_FALSE(other == flag);
    flags.push_back(flag);
  }
  // (t - 1)(t - 1): first step is Ker(T_1 - 1) = F_2
  Factorization<GaloisField> ones{{f4.one(), f4.one()}};
  auto flag = flag_from_factorization(f, report.classes, ones);
  EXPECT_EQ(flag.steps[0][0].dim(), 1u);
  EXPECT_TRUE(flag.steps[0][0].contains(fp::Vec{1, 0}));
  EXPECT_EQ(flag.steps[1][0].dim(), 2u);
}

TEST(WPoly, BasesSpanningTheSameFlagAgree) {
  Context<GaloisField> f16{GaloisField::f16({2, 0})};
  auto a = f16.one();
  auto c = oracle::centralizer(a);
  auto all = f16.elements();
  std::vector<Scalar<GaloisField>> us;
  for (const auto& x : all) {
    if (x.is_zero()) continue;
    auto trial = us;
    trial.push_back(x);
    if (oracle::right_independent(trial, c)) us = trial;
    if (us.size() == 2) break;
  }
  ASSERT_EQ(us.size(), 2u);
  auto base = factorization_from_basis(a, us);
  for (const auto& c1 : c) {
    if (c1.is_zero()) continue;
    for (const auto& c2 : c) {
      std::vector vs{us[0] * c1, us[0] * c2 + us[1]};
      EXPECT_EQ(factorization_from_basis(a, vs), base);
    }
  }
}

TEST(WPoly, TwoDimensionalFamily) {
  // S = x -> x^4 on F_16, so C(1) = F_4 and E(f, 1) = C + xC is a plane over F_4
  Context<GaloisField> f16{GaloisField::f16({2, 0})};
  auto a = f16.one();
  auto c = oracle::centralizer(a);
  ASSERT_EQ(c.size(), 4u);
  Scalar<GaloisField> x = f16.zero();
  for (const auto& e : f16.elements())
    if (std::find(c.begin(), c.end(), e) == c.end()) {
      x = e;
      break;
    }
  auto f = llcm_set(std::vector{a, sd_conjugate(a, x)}).result();
  ASSERT_EQ(f.degree(), 2);

  std::vector<std::vector<std::string>> expected;
  auto ax = sd_conjugate(a, x);
  expected.push_back(Factorization<GaloisField>{{ax, sd_conjugate(a, a - ax)}}.printed());
  for (const auto& beta : c) {
    Scalar<GaloisField> u = f16.one() + x * beta;
    Scalar<GaloisField> root = sd_conjugate(a, u);
    Scalar<GaloisField> gamma = beta.is_zero() ? operator_apply(F::linear(root), a, x) : a - root;
    expected.push_back(Factorization<GaloisField>{{root, sd_conjugate(a, gamma)}}.printed());
  }
  std::sort(expected.begin(), expected.end());
  auto facs = enumerate_factorizations(f);
  EXPECT_EQ(facs.size(), c.size() + 1);
  EXPECT_EQ(printed(facs), expected);
  for (const auto& fac : facs) EXPECT_EQ(fac.product(f16), f);
}

TEST(WPoly, WeightMatchesIdealOracleOverF4) {
  for (auto twist : {GaloisTwist{1, 0}, GaloisTwist{0, 0}, GaloisTwist{1, 2}}) {
    Context<GaloisField> f4{GaloisField::f4(twist)};
    for (int d = 1; d <= 2; ++d)
      for (const auto& f : oracle::monic_polys(f4, d)) {
        auto report = is_w_polynomial(f);
        EXPECT_LE(static_cast<int>(report.weight), d);
        EXPECT_EQ(report.is_wedderburn, oracle::is_w_polynomial(f)) << f;
        if (report.is_wedderburn) {
          EXPECT_EQ(printed(enumerate_factorizations(f, report.classes)), oracle::factorizations(f));
        }
      }
  }
}

TEST(WPoly, QuaternionClassesWithoutWeights) {
  Context<Quaternions> h{Quaternions{}};
  using H = SkewPoly<Quaternions>;
  auto f = H::linear(h.parse("i")) * H::linear(h.parse("2"));
  EXPECT_THROW(is_w_polynomial(f), Unsupported);
  std::vector cands{h.parse("2"), h.parse("i"), h.parse("j")};
  auto classes = class_decomposition(f, root_set(f, std::optional(cands)));
  // i is a root too: (t - i)(t - 2) = t^2 - (2 + i)t + 2i
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].representative, h.parse("2"));
  EXPECT_EQ(classes[1].representative, h.parse("i"));
}
