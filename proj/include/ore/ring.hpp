#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ore {

/// A coefficient structure A bundled with its twist (S, D) for A[t;S,D].
///
/// Elements are plain values in canonical form, so equality of payloads is
/// equality of ring elements. `inverse` returns nothing for zero and for
/// non-units. `atom` resolves the single-letter generator names of the
/// element grammar ("w", "x", "i", ...).
template <class R>
concept Ring = std::copy_constructible<R> &&
               requires(const R& r, const typename R::Element& a, const mpz_class& n,
                        std::string_view name) {
                 typename R::Element;
                 { r.zero() } -> std::same_as<typename R::Element>;
                 { r.one() } -> std::same_as<typename R::Element>;
                 { r.from_integer(n) } -> std::same_as<typename R::Element>;
                 { r.add(a, a) } -> std::same_as<typename R::Element>;
                 { r.sub(a, a) } -> std::same_as<typename R::Element>;
                 { r.mul(a, a) } -> std::same_as<typename R::Element>;
                 { r.neg(a) } -> std::same_as<typename R::Element>;
                 { r.equal(a, a) } -> std::convertible_to<bool>;
                 { r.is_zero(a) } -> std::convertible_to<bool>;
                 { r.inverse(a) } -> std::same_as<std::optional<typename R::Element>>;
                 { r.apply_S(a) } -> std::same_as<typename R::Element>;
                 { r.apply_D(a) } -> std::same_as<typename R::Element>;
                 { r.format(a) } -> std::same_as<std::string>;
                 { r.atom(name) } -> std::same_as<std::optional<typename R::Element>>;
                 { r.describe() } -> std::same_as<std::string>;
                 { r.is_division_ring() } -> std::convertible_to<bool>;
               };

/// A ring whose elements can be listed, indexed 0 .. order()-1.
template <class R>
concept FiniteRing = Ring<R> && requires(const R& r, std::uint64_t index) {
  { r.order() } -> std::convertible_to<std::uint64_t>;
  { r.element_at(index) } -> std::same_as<typename R::Element>;
};

/// A finite field presented as a vector space over its prime field F_p,
/// with S and D both F_p-linear.
template <class R>
concept PrimeLinearField =
    FiniteRing<R> && requires(const R& r, const typename R::Element& a, const std::vector<int>& v) {
      { r.prime() } -> std::convertible_to<int>;
      { r.dimension() } -> std::convertible_to<int>;
      { r.coordinates(a) } -> std::same_as<std::vector<int>>;
      { r.from_coordinates(v) } -> std::same_as<typename R::Element>;
    };

/// Rings that can draw small pseudo-random elements for property checks.
template <class R>
concept SampleableRing = Ring<R> && requires(const R& r, std::mt19937_64& rng) {
  { r.random(rng) } -> std::same_as<typename R::Element>;
};

/// Rings with bracketed literals in the element grammar ("[[1,0],[0,1]]").
template <class R>
concept BracketLiteralRing = Ring<R> && requires(const R& r, std::string_view text) {
  { r.parse_bracket(text) } -> std::same_as<typename R::Element>;
};

}  // namespace ore
