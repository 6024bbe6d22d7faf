#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ore/errors.hpp"
#include "ore/expression.hpp"
#include "ore/ring.hpp"
#include "ore/scalar.hpp"

namespace ore {

/// A polynomial f = sum a_i t^i of A[t;S,D] with coefficients on the left,
/// multiplied by the rule t a = S(a) t + D(a).
template <Ring R>
class SkewPoly {
 public:
  using Coeff = Scalar<R>;

  /// Degree of the zero polynomial; below every degree that arithmetic produces.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min() / 4;

  explicit SkewPoly(Context<R> ctx) : ctx_(std::move(ctx)) {}

  SkewPoly(Context<R> ctx, std::vector<Coeff> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
      if (!(c.context() == ctx_)) throw ContextMismatch();
    trim();
  }

  static SkewPoly constant(const Coeff& c) { return SkewPoly(c.context(), {c}); }

  static SkewPoly monomial(const Coeff& c, std::size_t k) {
    std::vector<Coeff> coeffs(k + 1, c.context().zero());
    coeffs[k] = c;
    return SkewPoly(c.context(), std::move(coeffs));
  }

  static SkewPoly variable(const Context<R>& ctx) { return monomial(ctx.one(), 1); }

  /// t - a.
  static SkewPoly linear(const Coeff& a) { return SkewPoly(a.context(), {-a, a.context().one()}); }

  /// Product (t - b_n) ... (t - b_1) of roots listed rightmost first.
  static SkewPoly from_linear_factors(const Context<R>& ctx, const std::vector<Coeff>& rightmost_first) {
    SkewPoly f = constant(ctx.one());
    for (const auto& b : rightmost_first) f = linear(b) * f;
    return f;
  }

  static SkewPoly parse(const Context<R>& ctx, std::string_view text);

  const Context<R>& context() const noexcept { return ctx_; }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : ctx_.zero(); }
  Coeff leading() const { return c_.empty() ? ctx_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == ctx_.one(); }

  /// t * f.
  SkewPoly times_t() const {
    std::vector<Coeff> out(c_.size() + 1, ctx_.zero());
    for (std::size_t j = 0; j < c_.size(); ++j) {
      out[j + 1] += apply_S(c_[j]);
      out[j] += apply_D(c_[j]);
    }
    return SkewPoly(ctx_, std::move(out));
  }

  /// c * f.
  SkewPoly left_scale(const Coeff& c) const {
    std::vector<Coeff> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(c * a);
    return SkewPoly(ctx_, std::move(out));
  }

  friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
    f.check_same(g);
    std::vector<Coeff> out;
    const std::size_t n = std::max(f.c_.size(), g.c_.size());
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(f.coeff(k) + g.coeff(k));
    return SkewPoly(f.ctx_, std::move(out));
  }

  friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
    f.check_same(g);
    std::vector<Coeff> out;
    const std::size_t n = std::max(f.c_.size(), g.c_.size());
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(f.coeff(k) - g.coeff(k));
    return SkewPoly(f.ctx_, std::move(out));
  }

  SkewPoly operator-() const {
    std::vector<Coeff> out;
    for (const auto& a : c_) out.push_back(-a);
    return SkewPoly(ctx_, std::move(out));
  }

  friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
    f.check_same(g);
    SkewPoly acc(f.ctx_);
    if (f.is_zero() || g.is_zero()) return acc;
    SkewPoly shifted = g;  // t^i * g
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      if (i > 0) shifted = shifted.times_t();
      if (!f.c_[i].is_zero()) acc = acc + shifted.left_scale(f.c_[i]);
    }
    return acc;
  }

  SkewPoly& operator+=(const SkewPoly& g) { return *this = *this + g; }
  SkewPoly& operator-=(const SkewPoly& g) { return *this = *this - g; }
  SkewPoly& operator*=(const SkewPoly& g) { return *this = *this * g; }

  friend bool operator==(const SkewPoly& f, const SkewPoly& g) {
    f.check_same(g);
    if (f.c_.size() != g.c_.size()) return false;
    for (std::size_t k = 0; k < f.c_.size(); ++k)
      if (!(f.c_[k] == g.c_[k])) return false;
    return true;
  }

  /// Text form such as "t^2 + (w)*t + 1"; non-integer coefficients are parenthesized.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      std::string s = c_[k].str();
      bool negative = s.size() > 1 && s[0] == '-' && all_digits(s.substr(1));
      if (negative) s = s.substr(1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string var = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
      if (k > 0 && (s == "1" || c_[k] == ctx_.one())) {
        out += var;
      } else {
        out += all_digits(s) ? s : "(" + s + ")";
        if (k > 0) out += "*" + var;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const SkewPoly& f) { return os << f.str(); }

 private:
  static bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  void check_same(const SkewPoly& other) const {
    if (!(ctx_ == other.ctx_)) throw ContextMismatch();
  }

  Context<R> ctx_;
  std::vector<Coeff> c_;
};

namespace detail {

template <Ring R>
struct PolyOps {
  Context<R> ctx;

  SkewPoly<R> one() const { return SkewPoly<R>::constant(ctx.one()); }
  SkewPoly<R> from_integer(const mpz_class& n) const { return SkewPoly<R>::constant(ctx(ctx->from_integer(n))); }
  std::optional<SkewPoly<R>> atom(std::string_view name) const {
    if (name == "t") return SkewPoly<R>::variable(ctx);
    auto value = ctx->atom(name);
    if (!value) return std::nullopt;
    return SkewPoly<R>::constant(ctx(*std::move(value)));
  }
  SkewPoly<R> bracket(std::string_view text) const {
    return SkewPoly<R>::constant(ScalarOps<R>{ctx}.bracket(text));
  }
  SkewPoly<R> add(const SkewPoly<R>& a, const SkewPoly<R>& b) const { return a + b; }
  SkewPoly<R> sub(const SkewPoly<R>& a, const SkewPoly<R>& b) const { return a - b; }
  SkewPoly<R> mul(const SkewPoly<R>& a, const SkewPoly<R>& b) const { return a * b; }
  SkewPoly<R> neg(const SkewPoly<R>& a) const { return -a; }
  SkewPoly<R> divide(const SkewPoly<R>& a, const SkewPoly<R>& b) const {
    if (b.degree() != 0) throw InvalidInput("only division by a nonzero constant is allowed");
    return a * SkewPoly<R>::constant(b.leading().inverse());
  }
};

}  // namespace detail

template <Ring R>
SkewPoly<R> SkewPoly<R>::parse(const Context<R>& ctx, std::string_view text) {
  return expr::parse<SkewPoly<R>>(text, detail::PolyOps<R>{ctx});
}

/// f = q g + r with deg r < deg g (right division).
template <Ring R>
std::pair<SkewPoly<R>, SkewPoly<R>> right_divmod(const SkewPoly<R>& f, const SkewPoly<R>& g) {
  if (g.is_zero()) throw InvalidInput("right division by the zero polynomial");
  if (!(f.context() == g.context())) throw ContextMismatch();
  const auto& ctx = f.context();
  SkewPoly<R> q(ctx);
  SkewPoly<R> r = f;
  const int m = g.degree();
  if (r.degree() < m) return {q, r};

  // shifted[s] = t^s g, with leading coefficient S^s(lc g)
  std::vector<SkewPoly<R>> shifted{g};
  std::vector<Scalar<R>> lead_inv;
  auto inverse_lead = [&](std::size_t s) {
    while (shifted.size() <= s) shifted.push_back(shifted.back().times_t());
    while (lead_inv.size() <= s) {
      const auto& lc = shifted[lead_inv.size()].coeff(static_cast<std::size_t>(m) + lead_inv.size());
      auto inv = lc.try_inverse();
      if (!inv) throw NotInvertible("leading coefficient " + lc.str() + " of the divisor is not invertible");
      lead_inv.push_back(*inv);
    }
    return lead_inv[s];
  };

  while (r.degree() >= m) {
    const std::size_t k = static_cast<std::size_t>(r.degree());
    const std::size_t s = k - static_cast<std::size_t>(m);
    Scalar<R> e = r.leading() * inverse_lead(s);
    q += SkewPoly<R>::monomial(e, s);
    r -= shifted[s].left_scale(e);
    if (r.degree() >= static_cast<int>(k)) throw NotInvertible("right division did not reduce the degree");
  }
  return {q, r};
}

/// N_i(a): N_0 = 1, N_{i+1} = S(N_i) a + D(N_i).
template <Ring R>
Scalar<R> norm_N(const Scalar<R>& a, std::size_t i) {
  Scalar<R> n = a.context().one();
  for (std::size_t k = 0; k < i; ++k) n = pseudo_linear_apply(a, n);
  return n;
}

/// f(a) = sum a_i N_i(a), the remainder of f right-divided by t - a.
template <Ring R>
Scalar<R> eval(const SkewPoly<R>& f, const Scalar<R>& a) {
  if (!(f.context() == a.context())) throw ContextMismatch();
  Scalar<R> value = a.context().zero();
  Scalar<R> n = a.context().one();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) n = pseudo_linear_apply(a, n);
    value += f.coeffs()[i] * n;
  }
  return value;
}

/// (fg)(a) from f, g and a alone: 0 if g(a) = 0, else f(a^{g(a)}) g(a).
template <Ring R>
Scalar<R> product_formula(const SkewPoly<R>& f, const SkewPoly<R>& g, const Scalar<R>& a) {
  Scalar<R> ga = eval(g, a);
  if (ga.is_zero()) return ga;
  auto inv = ga.try_inverse();
  if (!inv) throw NotInvertible("g(a) = " + ga.str() + " is not invertible");
  return eval(f, sd_conjugate(a, ga)) * ga;
}

/// [f, t - a]_l for monic f: f if f(a) = 0, else (t - a^{f(a)}) f.
template <Ring R>
SkewPoly<R> llcm_linear(const SkewPoly<R>& f, const Scalar<R>& a) {
  if (!f.is_monic()) throw InvalidInput("llcm_linear needs a monic polynomial");
  Scalar<R> fa = eval(f, a);
  if (fa.is_zero()) return f;
  return SkewPoly<R>::linear(sd_conjugate(a, fa)) * f;
}

/// T_a^k(x).
template <Ring R>
Scalar<R> pseudo_linear_power(const Scalar<R>& a, const Scalar<R>& x, std::size_t k) {
  Scalar<R> y = x;
  for (std::size_t j = 0; j < k; ++j) y = pseudo_linear_apply(a, y);
  return y;
}

/// f(T_a)(x) = sum a_i T_a^i(x).
template <Ring R>
Scalar<R> operator_apply(const SkewPoly<R>& f, const Scalar<R>& a, const Scalar<R>& x) {
  Scalar<R> value = a.context().zero();
  Scalar<R> y = x;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) y = pseudo_linear_apply(a, y);
    value += f.coeffs()[i] * y;
  }
  return value;
}

}  // namespace ore
