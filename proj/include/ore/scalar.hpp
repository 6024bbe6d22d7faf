#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ore/errors.hpp"
#include "ore/expression.hpp"
#include "ore/ring.hpp"

namespace ore {

template <Ring R>
class Scalar;

/// Shared, immutable handle to a coefficient structure.
///
/// Two contexts are the same context only if they share one ring object;
/// structurally equal rings built separately do not mix.
template <Ring R>
class Context {
 public:
  using ring_type = R;
  using Element = typename R::Element;

  explicit Context(R ring) : ring_(std::make_shared<const R>(std::move(ring))) {}

  const R& ring() const noexcept { return *ring_; }
  const R* operator->() const noexcept { return ring_.get(); }

  Scalar<R> operator()(Element value) const;
  Scalar<R> zero() const;
  Scalar<R> one() const;
  Scalar<R> from_int(long value) const;

  /// Parses the element grammar of this ring.
  Scalar<R> parse(std::string_view text) const;

  /// All elements in index order.
  std::vector<Scalar<R>> elements() const
    requires FiniteRing<R>;

  Scalar<R> random(std::mt19937_64& rng) const
    requires SampleableRing<R>;

  friend bool operator==(const Context& a, const Context& b) noexcept { return a.ring_ == b.ring_; }

 private:
  std::shared_ptr<const R> ring_;
};

/// An element of a coefficient structure tied to its context.
template <Ring R>
class Scalar {
 public:
  using ring_type = R;
  using Element = typename R::Element;

  Scalar(Context<R> context, Element value) : context_(std::move(context)), value_(std::move(value)) {}

  const Context<R>& context() const noexcept { return context_; }
  const R& ring() const noexcept { return context_.ring(); }
  const Element& value() const noexcept { return value_; }

  bool is_zero() const { return ring().is_zero(value_); }

  std::optional<Scalar> try_inverse() const {
    auto inv = ring().inverse(value_);
    if (!inv) return std::nullopt;
    return Scalar(context_, *std::move(inv));
  }

  Scalar inverse() const {
    auto inv = try_inverse();
    if (!inv) throw NotInvertible("element " + str() + " is not invertible");
    return *std::move(inv);
  }

  std::string str() const { return ring().format(value_); }

  Scalar operator-() const { return Scalar(context_, ring().neg(value_)); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    return Scalar(a.context_, a.ring().add(a.value_, b.value_));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    return Scalar(a.context_, a.ring().sub(a.value_, b.value_));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    return Scalar(a.context_, a.ring().mul(a.value_, b.value_));
  }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    return a.ring().equal(a.value_, b.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << a.str(); }

 private:
  void check_same(const Scalar& other) const {
    if (!(context_ == other.context_)) throw ContextMismatch();
  }

  Context<R> context_;
  Element value_;
};

template <Ring R>
Scalar<R> Context<R>::operator()(Element value) const {
  return Scalar<R>(*this, std::move(value));
}

template <Ring R>
Scalar<R> Context<R>::zero() const {
  return (*this)(ring_->zero());
}

template <Ring R>
Scalar<R> Context<R>::one() const {
  return (*this)(ring_->one());
}

template <Ring R>
Scalar<R> Context<R>::from_int(long value) const {
  return (*this)(ring_->from_integer(mpz_class(value)));
}

namespace detail {

template <Ring R>
struct ScalarOps {
  Context<R> ctx;

  Scalar<R> one() const { return ctx.one(); }
  Scalar<R> from_integer(const mpz_class& n) const { return ctx(ctx->from_integer(n)); }
  std::optional<Scalar<R>> atom(std::string_view name) const {
    auto value = ctx->atom(name);
    if (!value) return std::nullopt;
    return ctx(*std::move(value));
  }
  Scalar<R> bracket(std::string_view text) const {
    if constexpr (BracketLiteralRing<R>) {
      return ctx(ctx->parse_bracket(text));
    } else {
      throw ParseError("bracketed literals are not elements of " + ctx->describe(), 0);
    }
  }
  Scalar<R> add(const Scalar<R>& a, const Scalar<R>& b) const { return a + b; }
  Scalar<R> sub(const Scalar<R>& a, const Scalar<R>& b) const { return a - b; }
  Scalar<R> mul(const Scalar<R>& a, const Scalar<R>& b) const { return a * b; }
  Scalar<R> neg(const Scalar<R>& a) const { return -a; }
  Scalar<R> divide(const Scalar<R>& a, const Scalar<R>& b) const { return a * b.inverse(); }
};

}  // namespace detail

template <Ring R>
Scalar<R> Context<R>::parse(std::string_view text) const {
  return expr::parse<Scalar<R>>(text, detail::ScalarOps<R>{*this});
}

template <Ring R>
std::vector<Scalar<R>> Context<R>::elements() const
  requires FiniteRing<R>
{
  std::vector<Scalar<R>> all;
  const std::uint64_t n = ring_->order();
  all.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) all.push_back((*this)(ring_->element_at(k)));
  return all;
}

template <Ring R>
Scalar<R> Context<R>::random(std::mt19937_64& rng) const
  requires SampleableRing<R>
{
  return (*this)(ring_->random(rng));
}

template <Ring R>
Scalar<R> apply_S(const Scalar<R>& a) {
  return a.context()(a.ring().apply_S(a.value()));
}

template <Ring R>
Scalar<R> apply_D(const Scalar<R>& a) {
  return a.context()(a.ring().apply_D(a.value()));
}

/// The (S,D)-conjugate a^c = S(c) a c^{-1} + D(c) c^{-1}.
template <Ring R>
Scalar<R> sd_conjugate(const Scalar<R>& a, const Scalar<R>& c) {
  if (c.is_zero()) throw InvalidInput("conjugation by zero is undefined");
  Scalar<R> c_inv = c.inverse();
  return apply_S(c) * a * c_inv + apply_D(c) * c_inv;
}

/// The pseudo-linear map T_a(x) = S(x) a + D(x).
template <Ring R>
Scalar<R> pseudo_linear_apply(const Scalar<R>& a, const Scalar<R>& x) {
  return apply_S(x) * a + apply_D(x);
}

/// x lies in the (S,D)-centralizer of a (x = 0 counts as a member).
template <Ring R>
bool is_in_centralizer(const Scalar<R>& a, const Scalar<R>& x) {
  return pseudo_linear_apply(a, x) == a * x;
}

}  // namespace ore
