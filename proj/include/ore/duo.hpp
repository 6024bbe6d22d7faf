#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ore/errors.hpp"
#include "ore/ring.hpp"
#include "ore/rings/integers_mod.hpp"
#include "ore/rings/matrix_ring.hpp"
#include "ore/rings/triangular.hpp"
#include "ore/scalar.hpp"
#include "ore/skew_poly.hpp"

namespace ore {

template <class T>
struct is_matrix_ring : std::false_type {};
template <class B>
struct is_matrix_ring<MatrixRing<B>> : std::true_type {};

/// Outcome of solving c r = S(r) b + D(r) for c.
template <Ring R>
struct DuoSolution {
  std::optional<Scalar<R>> c;
  std::string method;       // how the equation was decided
  std::string certificate;  // why no c exists, when none does

  bool solvable() const { return c.has_value(); }
};

namespace detail {

/// Solves m x = rhs over a commutative field B; on failure describes the
/// inconsistent reduced equation.
template <Ring B>
std::optional<std::vector<typename B::Element>> solve_linear(const B& base,
                                                             std::vector<std::vector<typename B::Element>> m,
                                                             std::vector<typename B::Element> rhs,
                                                             std::string& certificate) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && base.is_zero(m[sel][col])) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    std::swap(rhs[sel], rhs[row]);
    auto inv = base.inverse(m[row][col]);
    if (!inv) throw Unsupported("linear solve over a base ring that is not a field");
    for (auto& e : m[row]) e = base.mul(*inv, e);
    rhs[row] = base.mul(*inv, rhs[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || base.is_zero(m[r][col])) continue;
      auto factor = m[r][col];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = base.sub(m[r][k], base.mul(factor, m[row][k]));
      rhs[r] = base.sub(rhs[r], base.mul(factor, rhs[row]));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (!base.is_zero(rhs[r])) {
      certificate = "reduced equation 0 = " + base.format(rhs[r]);
      return std::nullopt;
    }
  std::vector<typename B::Element> x(cols, base.zero());
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = rhs[r];
  return x;
}

template <FiniteRing R>
std::optional<Scalar<R>> exhaustive_left_solve(const Scalar<R>& r, const Scalar<R>& rhs) {
  for (const auto& c : r.context().elements())
    if (c * r == rhs) return c;
  return std::nullopt;
}

}  // namespace detail

/// Finds c with c r = S(r) b + D(r), or certifies that none exists.
template <Ring R>
DuoSolution<R> duo_solve(const Scalar<R>& r, const Scalar<R>& b) {
  const auto& ctx = r.context();
  const Scalar<R> rhs = apply_S(r) * b + apply_D(r);
  if (auto inv = r.try_inverse()) return {rhs * *inv, "unit", ""};
  if (r.is_zero()) return {ctx.zero(), "zero", ""};

  if constexpr (std::is_same_v<R, IntegersMod>) {
    const std::uint64_t n = ctx->modulus();
    if (n <= 64) {
      auto c = detail::exhaustive_left_solve(r, rhs);
      if (c) return {c, "exhaustive", ""};
      return {std::nullopt, "exhaustive", "no c in " + ctx->describe() + " satisfies c*" + r.str() + " = " + rhs.str()};
    }
    const std::uint64_t g = std::gcd(r.value(), n);
    if (rhs.value() % g != 0)
      return {std::nullopt, "gcd", "gcd(" + r.str() + ", " + std::to_string(n) + ") = " + std::to_string(g) +
                                        " does not divide " + rhs.str()};
    IntegersMod reduced(n / g);
    std::uint64_t c = reduced.mul(rhs.value() / g % (n / g), *reduced.inverse(r.value() / g % (n / g)));
    return {ctx(c), "gcd", ""};
  } else if constexpr (is_matrix_ring<R>::value) {
    const auto& ring = ctx.ring();
    const auto& base = ring.base();
    if (!base.is_division_ring()) {
      if constexpr (FiniteRing<R>) {
        auto c = detail::exhaustive_left_solve(r, rhs);
        if (c) return {c, "exhaustive", ""};
        return {std::nullopt, "exhaustive", "no c in " + ring.describe() + " satisfies c*r = S(r)b + D(r)"};
      }
      throw Unsupported("matrix equations over a base that is not a field");
    }
    // Row i of c: sum_k c_ik r_kj = rhs_ij for every j.
    const std::size_t n = ring.size();
    std::vector<std::vector<typename R::Entry>> m(n, std::vector<typename R::Entry>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m[j][k] = ring.at(r.value(), k, j);
    typename R::Element c(n * n, base.zero());
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<typename R::Entry> target(n);
      for (std::size_t j = 0; j < n; ++j) target[j] = ring.at(rhs.value(), i, j);
      std::string why;
      auto row = detail::solve_linear(base, m, target, why);
      if (!row) return {std::nullopt, "linear", "row " + std::to_string(i + 1) + " of c: " + why};
      for (std::size_t k = 0; k < n; ++k) c[i * n + k] = (*row)[k];
    }
    return {ctx(c), "linear", ""};
  } else if constexpr (std::is_same_v<R, TriangularRing>) {
    // r = (0, g) since r is not a unit; (f_c, g_c)(0, g) = (0, f_c(x^2) g).
    const auto& q = ctx->functions();
    const auto& target = rhs.value();
    if (!q.is_zero(target.f))
      return {std::nullopt, "analytic", "diagonal part of S(r)b + D(r) is " + q.format(target.f) + ", not 0"};
    auto h = q.mul(target.g, *q.inverse(r.value().g));
    QPoly num_reflected = h.num.reflected();
    QPoly den_reflected = h.den.reflected();
    if (!(RationalFunctions::make(num_reflected, den_reflected) == h))
      return {std::nullopt, "analytic",
              "need f(x^2) = " + q.format(h) + ", which is not a function of x^2 (h(-x) != h(x))"};
    auto halve = [](const QPoly& p) {
      std::vector<mpq_class> even;
      for (std::size_t k = 0; k < p.coeffs().size(); k += 2) even.push_back(p.coeffs()[k]);
      return QPoly(std::move(even));
    };
    auto fc = RationalFunctions::make(halve(h.num), halve(h.den));
    return {ctx(TriangularRing::Element{fc, {}}), "analytic", ""};
  } else if constexpr (FiniteRing<R>) {
    auto c = detail::exhaustive_left_solve(r, rhs);
    if (c) return {c, "exhaustive", ""};
    return {std::nullopt, "exhaustive", "no element c satisfies c*r = S(r)b + D(r)"};
  } else {
    throw Unsupported("c r = S(r) b + D(r) cannot be decided in " + ctx->describe());
  }
}

template <Ring R>
struct Llcm2Result {
  bool exists = false;
  std::optional<Scalar<R>> c;  // (t - c)(t - a) = (t - d)(t - b)
  std::optional<Scalar<R>> d;
  DuoSolution<R> solution;
};

/// A monic degree-two polynomial in R(t - a) ∩ R(t - b), via
/// c (a - b) = S(a - b) b + D(a - b) and d = c + S(a - b).
template <Ring R>
Llcm2Result<R> llcm2_exists(const Scalar<R>& a, const Scalar<R>& b) {
  if (a == b) return {true, a, a, DuoSolution<R>{a, "equal", ""}};
  const Scalar<R> r = a - b;
  auto sol = duo_solve(r, b);
  if (!sol.c) return {false, std::nullopt, std::nullopt, sol};
  Scalar<R> c = *sol.c;
  Scalar<R> d = c + apply_S(r);
  auto lhs = SkewPoly<R>::linear(c) * SkewPoly<R>::linear(a);
  auto rhs = SkewPoly<R>::linear(d) * SkewPoly<R>::linear(b);
  if (!(lhs == rhs)) throw OreError("internal: (t - c)(t - a) != (t - d)(t - b)");
  return {true, c, d, sol};
}

template <Ring R>
struct ChainResult {
  bool success = false;
  std::map<std::vector<std::size_t>, Scalar<R>> chain;  // a_{i_1...i_l}, indices from 1
  std::vector<SkewPoly<R>> partials;                    // f_1, ..., f_n
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> failing_pair;
  std::size_t failing_level = 0;

  const SkewPoly<R>& result() const { return partials.back(); }
};

/// The inductive chain (t - a_{i_1..i_l})(t - a_{i_1..i_{l-1}}) =
/// (t - a_{i_1..i_{l-2} i_l i_{l-1}})(t - a_{i_1..i_{l-2} i_l}), then
/// f_l = (t - a_{1..l}) f_{l-1}.
template <Ring R>
ChainResult<R> chain_construct(const std::vector<Scalar<R>>& points) {
  if (points.empty()) throw InvalidInput("chain_construct needs at least one point");
  ChainResult<R> out;
  using Key = std::vector<std::size_t>;
  for (std::size_t i = 0; i < points.size(); ++i) out.chain.emplace(Key{i + 1}, points[i]);

  // Empty result records the pair that has no closure.
  auto get = [&](auto&& self, const Key& key) -> std::optional<Scalar<R>> {
    if (auto it = out.chain.find(key); it != out.chain.end()) return it->second;
    const std::size_t l = key.size();
    Key prefix(key.begin(), key.end() - 2);
    std::size_t x = key[l - 2];
    std::size_t y = key[l - 1];
    Key lo = prefix, hi = prefix;
    lo.push_back(std::min(x, y));
    hi.push_back(std::max(x, y));
    auto a = self(self, lo);
    if (!a) return std::nullopt;
    auto b = self(self, hi);
    if (!b) return std::nullopt;
    auto pair = llcm2_exists(*a, *b);
    if (!pair.exists) {
      out.failing_pair = {lo, hi};
      out.failing_level = l;
      return std::nullopt;
    }
    Key forward = lo;
    forward.push_back(std::max(x, y));
    Key backward = hi;
    backward.push_back(std::min(x, y));
    out.chain.emplace(forward, *pair.c);
    out.chain.emplace(backward, *pair.d);
    return out.chain.at(key);
  };

  SkewPoly<R> f = SkewPoly<R>::linear(points[0]);
  out.partials.push_back(f);
  Key key{1};
  for (std::size_t l = 2; l <= points.size(); ++l) {
    key.push_back(l);
    auto a = get(get, key);
    if (!a) return out;
    f = SkewPoly<R>::linear(*a) * f;
    out.partials.push_back(f);
  }
  for (const auto& p : points)
    if (!right_divmod(f, SkewPoly<R>::linear(p)).second.is_zero())
      throw OreError("internal: f_n is not right divisible by t - " + p.str());
  out.success = true;
  return out;
}

/// Condition 3 for every (r, b) in a finite ring: nothing, or a counterexample.
template <FiniteRing R>
std::optional<std::pair<Scalar<R>, Scalar<R>>> condition3_counterexample(const Context<R>& ctx) {
  auto all = ctx.elements();
  for (const auto& r : all)
    for (const auto& b : all)
      if (!duo_solve(r, b).solvable()) return std::make_pair(r, b);
  return std::nullopt;
}

/// S = id, D = 0: every principal left ideal A r is two-sided, checked by exhaustion.
template <FiniteRing R>
bool is_left_duo(const Context<R>& ctx) {
  auto all = ctx.elements();
  for (const auto& r : all) {
    std::vector<Scalar<R>> ideal;
    for (const auto& c : all) ideal.push_back(c * r);
    for (const auto& b : all) {
      Scalar<R> rb = r * b;
      bool inside = false;
      for (const auto& e : ideal)
        if (e == rb) {
          inside = true;
          break;
        }
      if (!inside) return false;
    }
  }
  return true;
}

}  // namespace ore
