#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ore/div_matrix.hpp"
#include "ore/errors.hpp"
#include "ore/ring.hpp"
#include "ore/scalar.hpp"
#include "ore/skew_poly.hpp"
#include "ore/symmetric.hpp"

namespace ore {

/// V(i, j) = N_i(x_j), rows from 0.
template <Ring R>
DivMatrix<R> vandermonde(const std::vector<Scalar<R>>& points) {
  if (points.empty()) throw InvalidInput("vandermonde needs at least one point");
  const std::size_t n = points.size();
  DivMatrix<R> v(points.front().context(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar<R> value = points.front().context().one();
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) value = pseudo_linear_apply(points[j], value);
      v(i, j) = value;
    }
  }
  return v;
}

/// W(i, j) = T_a^i(u_j), rows from 0.
template <Ring R>
DivMatrix<R> wronskian(const Scalar<R>& a, const std::vector<Scalar<R>>& us) {
  if (us.empty()) throw InvalidInput("wronskian needs at least one element");
  const std::size_t n = us.size();
  DivMatrix<R> w(a.context(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar<R> value = us[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) value = pseudo_linear_apply(a, value);
      w(i, j) = value;
    }
  }
  return w;
}

/// Row i holds the coefficients of f_i (coefficient of t^k in column k).
template <Ring R>
DivMatrix<R> coefficient_matrix(const Context<R>& ctx, const std::vector<SkewPoly<R>>& polys, std::size_t cols) {
  DivMatrix<R> m(ctx, polys.size(), cols);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].degree() >= static_cast<int>(cols)) throw InvalidInput("polynomial degree exceeds matrix width");
    for (std::size_t k = 0; k < polys[i].coeffs().size(); ++k) m(i, k) = polys[i].coeffs()[k];
  }
  return m;
}

template <Ring R>
struct VandermondeInverse {
  DivMatrix<R> c;                   // row i: coefficients of g_i = [t - x_j | j != i]_l
  std::vector<Scalar<R>> pivots;    // g_i(x_i)
  std::vector<SkewPoly<R>> g;
  DivMatrix<R> inverse;             // diag(g_i(x_i))^{-1} C
};

/// V^{-1} from C V = diag(g_1(x_1), ..., g_n(x_n)).
template <Ring R>
VandermondeInverse<R> inverse_vandermonde_via_F(const std::vector<Scalar<R>>& points) {
  if (points.empty()) throw InvalidInput("inverse_vandermonde_via_F needs at least one point");
  if (!pindep_test(points).independent) throw InvalidInput("points are P-dependent");
  const auto& ctx = points.front().context();
  const std::size_t n = points.size();
  std::vector<SkewPoly<R>> g;
  std::vector<Scalar<R>> pivots;
  std::vector<Scalar<R>> inv_pivots;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar<R>> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(points[j]);
    SkewPoly<R> gi = others.empty() ? SkewPoly<R>::constant(ctx.one()) : llcm_set(others).result();
    pivots.push_back(eval(gi, points[i]));
    inv_pivots.push_back(pivots.back().inverse());
    g.push_back(std::move(gi));
  }
  DivMatrix<R> c = coefficient_matrix(ctx, g, n);
  DivMatrix<R> inverse = DivMatrix<R>::diagonal(ctx, inv_pivots) * c;
  return {std::move(c), std::move(pivots), std::move(g), std::move(inverse)};
}

template <Ring R>
struct LuDecomposition {
  DivMatrix<R> lower;                      // Lambda, unitriangular; row i = coefficients of q_i
  DivMatrix<R> upper;                      // Lambda V (or Lambda W)
  std::vector<Scalar<R>> pivots;           // diagonal of upper
  std::optional<DivMatrix<R>> unit_upper;  // diag(pivots)^{-1} upper when every pivot is a unit
  std::vector<SkewPoly<R>> q;              // monic, deg q_i = i, q_i(x_j) = 0 for j < i
};

namespace detail {

/// q_i = t^{i - deg p_i} p_i with p_i the partial LLCMs of the points.
template <Ring R>
std::vector<SkewPoly<R>> annihilator_rows(const std::vector<Scalar<R>>& points) {
  auto trace = llcm_set(points);
  std::vector<SkewPoly<R>> q;
  for (std::size_t i = 0; i < points.size(); ++i) {
    SkewPoly<R> p = trace.partials[i];
    for (int d = p.degree(); d < static_cast<int>(i); ++d) p = p.times_t();
    q.push_back(std::move(p));
  }
  return q;
}

template <Ring R>
LuDecomposition<R> finish_lu(const Context<R>& ctx, std::vector<SkewPoly<R>> q, const DivMatrix<R>& m) {
  const std::size_t n = q.size();
  DivMatrix<R> lower = coefficient_matrix(ctx, q, n);
  DivMatrix<R> upper = lower * m;
  std::vector<Scalar<R>> pivots;
  std::vector<Scalar<R>> inv;
  bool units = true;
  for (std::size_t i = 0; i < n; ++i) {
    pivots.push_back(upper(i, i));
    auto p = upper(i, i).try_inverse();
    if (!p) {
      units = false;
    } else {
      inv.push_back(*p);
    }
  }
  std::optional<DivMatrix<R>> unit_upper;
  if (units) unit_upper = DivMatrix<R>::diagonal(ctx, inv) * upper;
  return {std::move(lower), std::move(upper), std::move(pivots), std::move(unit_upper), std::move(q)};
}

}  // namespace detail

/// Lambda V = U with U(i, j) = q_i(x_j); q_i = p_i for P-independent points.
template <Ring R>
LuDecomposition<R> lu_vandermonde(const std::vector<Scalar<R>>& points) {
  if (points.empty()) throw InvalidInput("lu_vandermonde needs at least one point");
  return detail::finish_lu(points.front().context(), detail::annihilator_rows(points), vandermonde(points));
}

/// Lambda W = Z with Z(i, j) = q_i(T_a)(u_j), the q_i built from the points a^{u_j}.
template <Ring R>
LuDecomposition<R> lu_wronskian(const Scalar<R>& a, const std::vector<Scalar<R>>& us) {
  if (us.empty()) throw InvalidInput("lu_wronskian needs at least one element");
  std::vector<Scalar<R>> points;
  for (const auto& u : us) points.push_back(sd_conjugate(a, u));
  return detail::finish_lu(a.context(), detail::annihilator_rows(points), wronskian(a, us));
}

/// Rows 0..n-2 shift (row i = e_{i+1}); the last row is (-f_0, ..., -f_{n-1}).
template <Ring R>
DivMatrix<R> companion_matrix(const SkewPoly<R>& f) {
  if (!f.is_monic() || f.degree() < 1) throw InvalidInput("companion matrix needs a monic polynomial of degree >= 1");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const auto& ctx = f.context();
  DivMatrix<R> c(ctx, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = ctx.one();
  for (std::size_t k = 0; k < n; ++k) c(n - 1, k) = -f.coeffs()[k];
  return c;
}

/// V(points) is invertible and C_f V = S(V) diag(points) + D(V).
template <Ring R>
bool companion_check(const SkewPoly<R>& f, const std::vector<Scalar<R>>& points) {
  if (f.degree() != static_cast<int>(points.size()))
    throw InvalidInput("companion_check needs deg f = number of points");
  const auto& ctx = f.context();
  DivMatrix<R> v = vandermonde(points);
  if (!gauss_invert(v).inverse) return false;
  DivMatrix<R> lhs = companion_matrix(f) * v;
  DivMatrix<R> rhs = v.map_S() * DivMatrix<R>::diagonal(ctx, points) + v.map_D();
  return lhs == rhs;
}

}  // namespace ore
