#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "ore/errors.hpp"
#include "ore/fp_linear.hpp"
#include "ore/ring.hpp"
#include "ore/rings/quaternions.hpp"
#include "ore/rings/rational_functions.hpp"
#include "ore/rings/rationals.hpp"
#include "ore/scalar.hpp"

namespace ore {

/// Kernel of an F_p-linear self-map of a finite field, as a subspace of
/// coordinate vectors.
template <PrimeLinearField R, class Map>
fp::Subspace prime_kernel(const Context<R>& ctx, Map&& map) {
  const int n = ctx->dimension();
  std::vector<fp::Vec> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    fp::Vec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = 1;
    images.push_back(ctx->coordinates(map(ctx(ctx->from_coordinates(e))).value()));
  }
  return fp::kernel(ctx->prime(), static_cast<std::size_t>(n), images);
}

template <PrimeLinearField R>
std::vector<Scalar<R>> to_scalars(const Context<R>& ctx, const fp::Subspace& space) {
  std::vector<Scalar<R>> out;
  for (const auto& row : space.rows()) out.push_back(ctx(ctx->from_coordinates(row)));
  return out;
}

template <PrimeLinearField R>
fp::Vec coordinates(const Scalar<R>& a) {
  return a.ring().coordinates(a.value());
}

/// C^{S,D}(a) together with 0, as the kernel of x -> S(x)a + D(x) - ax.
template <PrimeLinearField R>
fp::Subspace centralizer_space(const Scalar<R>& a) {
  return prime_kernel(a.context(), [&a](const Scalar<R>& x) { return pseudo_linear_apply(a, x) - a * x; });
}

/// A basis of C^{S,D}(a) over the prime field.
///
/// Only finite fields get an exhaustive basis; Q with the trivial twist
/// returns {1}. Everything else raises Unsupported.
template <Ring R>
std::vector<Scalar<R>> centralizer_basis(const Scalar<R>& a) {
  if constexpr (PrimeLinearField<R>) {
    return to_scalars(a.context(), centralizer_space(a));
  } else if constexpr (std::is_same_v<R, Rationals>) {
    return {a.context().one()};
  } else {
    throw Unsupported("centralizer bases are computed only over finite fields");
  }
}

/// Some x != 0 with a^x = b, i.e. S(x)a + D(x) = bx, if one exists.
template <PrimeLinearField R>
std::optional<Scalar<R>> conjugator(const Scalar<R>& a, const Scalar<R>& b) {
  auto space = prime_kernel(a.context(), [&](const Scalar<R>& x) { return pseudo_linear_apply(a, x) - b * x; });
  if (space.dim() == 0) return std::nullopt;
  return a.context()(a.ring().from_coordinates(space.rows().front()));
}

/// Decides whether b lies in the (S,D)-conjugacy class of a.
template <Ring R>
bool are_conjugate(const Scalar<R>& a, const Scalar<R>& b) {
  if constexpr (PrimeLinearField<R>) {
    return conjugator(a, b).has_value();
  } else if constexpr (std::is_same_v<R, Rationals>) {
    return a == b;
  } else if constexpr (std::is_same_v<R, Quaternions>) {
    const auto& tw = a.ring().twist();
    if (tw.inner_q || tw.inner_beta) throw Unsupported("quaternion conjugacy is decided only for the trivial twist");
    if (a == b) return true;
    const auto& x = a.value();
    const auto& y = b.value();
    bool a_central = sgn(x.x) == 0 && sgn(x.y) == 0 && sgn(x.z) == 0;
    bool b_central = sgn(y.x) == 0 && sgn(y.y) == 0 && sgn(y.z) == 0;
    if (a_central || b_central) return false;
    // Same minimal polynomial t^2 - 2w t + norm; conjugate by Skolem-Noether.
    return x.w == y.w && Quaternions::norm(x) == Quaternions::norm(y);
  } else if constexpr (std::is_same_v<R, RationalFunctions>) {
    const auto& tw = a.ring().twist();
    if (tw.substitution || tw.ddx || tw.inner_beta)
      throw Unsupported("conjugacy in Q(x) is decided only for the trivial twist");
    return a == b;
  } else {
    throw Unsupported("conjugacy is undecidable here for " + a.ring().describe());
  }
}

}  // namespace ore
