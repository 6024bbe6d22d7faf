#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ore/div_matrix.hpp"
#include "ore/errors.hpp"
#include "ore/ring.hpp"
#include "ore/scalar.hpp"
#include "ore/skew_poly.hpp"

namespace ore {

/// One step of the LLCM chain p_i = [t - x_i, p_{i-1}]_l.
template <Ring R>
struct LlcmStep {
  Scalar<R> point;                // x_i
  Scalar<R> value;                // p_{i-1}(x_i)
  std::optional<Scalar<R>> root;  // y_i = x_i^{p_{i-1}(x_i)}, absent on a degenerate step

  bool degenerate() const { return !root.has_value(); }
};

template <Ring R>
struct LlcmTrace {
  std::vector<LlcmStep<R>> steps;
  std::vector<SkewPoly<R>> partials;  // p_0 = 1, p_1, ..., p_n

  const SkewPoly<R>& result() const { return partials.back(); }
  std::size_t size() const { return steps.size(); }

  bool has_degenerate_step() const {
    for (const auto& s : steps)
      if (s.degenerate()) return true;
    return false;
  }

  /// P-independence: deg p_n equals the number of points.
  bool independent() const { return result().degree() == static_cast<int>(steps.size()); }

  std::vector<Scalar<R>> points() const {
    std::vector<Scalar<R>> out;
    for (const auto& s : steps) out.push_back(s.point);
    return out;
  }

  /// y_1, y_2, ... over the non-degenerate steps.
  std::vector<Scalar<R>> roots() const {
    std::vector<Scalar<R>> out;
    for (const auto& s : steps)
      if (s.root) out.push_back(*s.root);
    return out;
  }
};

/// Builds [t - x_i | i <= n]_l in the given order, recording repeated roots
/// as degenerate steps.
template <Ring R>
LlcmTrace<R> llcm_set(const std::vector<Scalar<R>>& points) {
  if (points.empty()) throw InvalidInput("llcm_set needs at least one point");
  const auto& ctx = points.front().context();
  LlcmTrace<R> trace;
  trace.partials.push_back(SkewPoly<R>::constant(ctx.one()));
  for (const auto& x : points) {
    const SkewPoly<R>& p = trace.partials.back();
    Scalar<R> value = eval(p, x);
    if (value.is_zero()) {
      trace.steps.push_back({x, value, std::nullopt});
      trace.partials.push_back(p);
      continue;
    }
    Scalar<R> y = sd_conjugate(x, value);
    trace.steps.push_back({x, value, y});
    trace.partials.push_back(SkewPoly<R>::linear(y) * p);
  }
  return trace;
}

/// lambda[i][k] for 0 <= k <= i <= n, with p_i = sum_k (-1)^k lambda[i][k] t^{i-k}.
template <Ring R>
struct SymmetricTable {
  std::vector<std::vector<Scalar<R>>> lambda;

  std::size_t size() const { return lambda.empty() ? 0 : lambda.size() - 1; }

  /// sum_k (-1)^k lambda[i][k] t^{i-k}.
  SkewPoly<R> polynomial(std::size_t i) const {
    const auto& row = lambda[i];
    const auto& ctx = row.front().context();
    std::vector<Scalar<R>> coeffs(i + 1, ctx.zero());
    for (std::size_t k = 0; k <= i; ++k) coeffs[i - k] = k % 2 == 0 ? row[k] : -row[k];
    return SkewPoly<R>(ctx, std::move(coeffs));
  }
};

/// The table from the recursion
///   lambda[i+1][k] = y_{i+1} lambda[i][k-1] + S(lambda[i][k]) - D(lambda[i][k-1]),
/// where out-of-range entries are zero.
template <Ring R>
SymmetricTable<R> symmetric_functions(const LlcmTrace<R>& trace) {
  if (trace.has_degenerate_step()) throw DegenerateTrace("symmetric functions need a trace without repeated roots");
  const auto& ctx = trace.result().context();
  const std::size_t n = trace.size();
  SymmetricTable<R> table;
  table.lambda.push_back({ctx.one()});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& prev = table.lambda[i];
    const Scalar<R>& y = *trace.steps[i].root;
    std::vector<Scalar<R>> next(i + 2, ctx.zero());
    for (std::size_t k = 0; k <= i + 1; ++k) {
      Scalar<R> value = ctx.zero();
      if (k <= i) value += apply_S(prev[k]);
      if (k >= 1) value += y * prev[k - 1] - apply_D(prev[k - 1]);
      next[k] = value;
    }
    table.lambda.push_back(std::move(next));
  }
  return table;
}

/// Checks (t - y_n)...(t - y_1) = sum_i (-1)^i lambda[n][i] t^{n-i} = p_n by expansion.
template <Ring R>
bool viete_check(const LlcmTrace<R>& trace) {
  auto table = symmetric_functions(trace);
  const auto& ctx = trace.result().context();
  auto product = SkewPoly<R>::from_linear_factors(ctx, trace.roots());
  if (!(product == trace.result())) return false;
  for (std::size_t i = 0; i <= trace.size(); ++i)
    if (!(table.polynomial(i) == trace.partials[i])) return false;
  return true;
}

template <Ring R>
struct BezoutResult {
  Scalar<R> value;                 // (z_n - y_n) ... (z_1 - y_1)
  std::vector<Scalar<R>> factors;  // z_i - y_i for i = 1..n
};

/// p_n(z) as the ordered product of z_i - y_i with z_i = z^{p_{i-1}(z)}.
template <Ring R>
BezoutResult<R> bezout_eval(const LlcmTrace<R>& trace, const Scalar<R>& z) {
  if (trace.has_degenerate_step()) throw DegenerateTrace("the Bezout factorization needs a trace without repeated roots");
  std::vector<Scalar<R>> factors;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    Scalar<R> value = eval(trace.partials[i], z);
    if (value.is_zero()) throw BezoutChainBroken(i + 1);
    factors.push_back(sd_conjugate(z, value) - *trace.steps[i].root);
  }
  Scalar<R> product = z.context().one();
  for (const auto& f : factors) product = f * product;
  return {product, std::move(factors)};
}

/// Compares p_n(T_a) with (T_a - a^{w_n}) o ... o (T_a - a^{w_1}) at every
/// test point, where w_i = p_{i-1}(T_a)(u_i) and the trace was built from
/// the points a^{u_i}.
template <Ring R>
bool miura_check(const LlcmTrace<R>& trace, const Scalar<R>& a, const std::vector<Scalar<R>>& exponents,
                 const std::vector<Scalar<R>>& test_points) {
  if (exponents.size() != trace.size()) throw InvalidInput("one exponent per trace point is required");
  if (trace.has_degenerate_step()) throw DegenerateTrace("the operator factorization needs distinct classes of roots");
  std::vector<Scalar<R>> conj;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (!(sd_conjugate(a, exponents[i]) == trace.steps[i].point))
      throw InvalidInput("trace point " + std::to_string(i + 1) + " is not a^{u_i}");
    Scalar<R> w = operator_apply(trace.partials[i], a, exponents[i]);
    conj.push_back(sd_conjugate(a, w));
  }
  for (const auto& x : test_points) {
    Scalar<R> composed = x;
    for (const auto& c : conj) composed = pseudo_linear_apply(a, composed) - c * composed;
    if (!(composed == operator_apply(trace.result(), a, x))) return false;
  }
  return true;
}

template <Ring R>
struct PindepResult {
  bool independent = false;
  DivMatrix<R> u;                           // u(i, j-1) = u_{ij}, i = 0..n-1, j = 1..n
  std::optional<std::vector<Scalar<R>>> factor_roots;  // x_j^{u_{j-1,j}}, j = 1..n, when independent
  std::optional<SkewPoly<R>> llcm;          // (t - x_n^{u_{n-1,n}}) ... (t - x_1^{u_{01}})
};

/// The U-matrix recursion
///   u_{0j} = 1,  u_{i+1,j} = 0 if u_{ij} u_{i,i+1} = 0,
///   else (x_j^{u_ij} - x_{i+1}^{u_{i,i+1}}) u_ij.
template <Ring R>
PindepResult<R> pindep_test(const std::vector<Scalar<R>>& points) {
  if (points.empty()) throw InvalidInput("pindep_test needs at least one point");
  const auto& ctx = points.front().context();
  const std::size_t n = points.size();
  DivMatrix<R> u(ctx, n, n);
  for (std::size_t j = 0; j < n; ++j) u(0, j) = ctx.one();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Scalar<R> diag = u(i, i);  // u_{i,i+1}
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar<R>& uij = u(i, j);
      if (uij.is_zero() || diag.is_zero()) continue;
      u(i + 1, j) = (sd_conjugate(points[j], uij) - sd_conjugate(points[i], diag)) * uij;
    }
  }
  PindepResult<R> result{!u(n - 1, n - 1).is_zero(), u, std::nullopt, std::nullopt};
  if (result.independent) {
    std::vector<Scalar<R>> roots;
    for (std::size_t j = 0; j < n; ++j) roots.push_back(sd_conjugate(points[j], u(j, j)));
    result.llcm = SkewPoly<R>::from_linear_factors(ctx, roots);
    result.factor_roots = std::move(roots);
  }
  return result;
}

}  // namespace ore
