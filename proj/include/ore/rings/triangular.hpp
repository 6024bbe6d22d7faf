#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ore/errors.hpp"
#include "ore/expression.hpp"
#include "ore/rings/matrix_ring.hpp"
#include "ore/rings/rational_functions.hpp"

namespace ore {

/// The subring of 2x2 upper triangular matrices over Q(x) of the form
/// [[f(x^2), g(x)], [0, f(x)]], stored as the pair (f, g). S = id, D = 0.
///
/// (f1, g1)(f2, g2) = (f1 f2, f1(x^2) g2 + g1 f2), and (f, g) is a unit
/// iff f != 0, with inverse (1/f, -g / (f(x^2) f)).
class TriangularRing {
 public:
  using Fn = RationalFunctions::Element;

  struct Element {
    Fn f;
    Fn g;
    friend bool operator==(const Element&, const Element&) = default;
  };

  const RationalFunctions& functions() const noexcept { return q_; }

  /// f(x) -> f(x^2).
  Fn lift(const Fn& f) const { return q_.compose(f, RationalFunctions::polynomial(QPoly::x() * QPoly::x())); }

  Element zero() const { return Element{}; }
  Element one() const { return Element{q_.one(), Fn{}}; }
  Element from_integer(const mpz_class& n) const { return Element{q_.from_integer(n), Fn{}}; }

  Element add(const Element& a, const Element& b) const { return Element{q_.add(a.f, b.f), q_.add(a.g, b.g)}; }
  Element sub(const Element& a, const Element& b) const { return Element{q_.sub(a.f, b.f), q_.sub(a.g, b.g)}; }
  Element neg(const Element& a) const { return Element{q_.neg(a.f), q_.neg(a.g)}; }
  Element mul(const Element& a, const Element& b) const {
    return Element{q_.mul(a.f, b.f), q_.add(q_.mul(lift(a.f), b.g), q_.mul(a.g, b.f))};
  }

  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return q_.is_zero(a.f) && q_.is_zero(a.g); }

  std::optional<Element> inverse(const Element& a) const {
    auto f_inv = q_.inverse(a.f);
    if (!f_inv) return std::nullopt;
    Fn denom_inv = *q_.inverse(q_.mul(lift(a.f), a.f));
    return Element{*f_inv, q_.neg(q_.mul(a.g, denom_inv))};
  }

  Element apply_S(const Element& a) const { return a; }
  Element apply_D(const Element&) const { return Element{}; }

  std::string format(const Element& a) const {
    return "[[" + q_.format(lift(a.f)) + "," + q_.format(a.g) + "],[0," + q_.format(a.f) + "]]";
  }

  std::optional<Element> atom(std::string_view) const { return std::nullopt; }

  /// Reads the matrix form and checks membership.
  Element parse_bracket(std::string_view text) const {
    auto rows = expr::split_bracket_list(text);
    if (rows.size() != 2) throw ParseError("expected 2 matrix rows", 0);
    auto top = expr::split_bracket_list(rows[0]);
    auto bottom = expr::split_bracket_list(rows[1]);
    if (top.size() != 2 || bottom.size() != 2) throw ParseError("expected 2 entries per row", 0);
    detail::BaseOps<RationalFunctions> ops{q_};
    Fn tl = expr::parse<Fn>(top[0], ops);
    Fn tr = expr::parse<Fn>(top[1], ops);
    Fn bl = expr::parse<Fn>(bottom[0], ops);
    Fn br = expr::parse<Fn>(bottom[1], ops);
    if (!q_.is_zero(bl)) throw InvalidInput("lower-left entry must be 0");
    if (!(lift(br) == tl)) throw InvalidInput("upper-left entry must be f(x^2) where f is the lower-right entry");
    return Element{br, tr};
  }

  std::string describe() const { return "{[[f(x^2), g], [0, f]] : f, g in Q(x)}"; }
  bool is_division_ring() const { return false; }

  Element random(std::mt19937_64& rng) const { return Element{q_.random(rng), q_.random(rng)}; }

 private:
  RationalFunctions q_;
};

}  // namespace ore
