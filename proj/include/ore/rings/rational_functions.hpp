#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "ore/errors.hpp"
#include "ore/rings/qpoly.hpp"

namespace ore {

/// The function field Q(x).
///
/// Twists: S is the identity or the Q-algebra map x -> h(x) for a
/// nonconstant h; D is a sum of d/dx (only with S = id) and an inner
/// S-derivation a -> beta a - S(a) beta.
class RationalFunctions {
 public:
  /// num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
  struct Element {
    QPoly num;
    QPoly den = QPoly(mpq_class(1));
    friend bool operator==(const Element&, const Element&) = default;
  };

  struct Twist {
    std::optional<Element> substitution;
    bool ddx = false;
    std::optional<Element> inner_beta;
  };

  RationalFunctions() = default;

  explicit RationalFunctions(Twist twist) : twist_(std::move(twist)) {
    if (twist_.substitution) {
      const Element& h = *twist_.substitution;
      if (h.num.degree() <= 0 && h.den.degree() <= 0)
        throw InvalidInput("substitution x -> h(x) needs a nonconstant h");
      if (twist_.ddx) throw InvalidInput("d/dx is an S-derivation only when S is the identity");
    }
    if (twist_.inner_beta && is_zero(*twist_.inner_beta)) twist_.inner_beta.reset();
  }

  const Twist& twist() const noexcept { return twist_; }

  static Element make(QPoly num, QPoly den) {
    if (den.is_zero()) throw NotInvertible("rational function with zero denominator");
    if (num.is_zero()) return Element{};
    QPoly g = QPoly::gcd(num, den);
    if (!g.is_one()) {
      num = QPoly::divmod(num, g).first;
      den = QPoly::divmod(den, g).first;
    }
    mpq_class lead = den.leading();
    return Element{num.scaled(1 / lead), den.scaled(1 / lead)};
  }

  static Element polynomial(QPoly p) { return Element{std::move(p), QPoly(mpq_class(1))}; }

  Element zero() const { return Element{}; }
  Element one() const { return polynomial(QPoly(mpq_class(1))); }
  Element from_integer(const mpz_class& n) const { return polynomial(QPoly(mpq_class(n))); }
  Element from_rational(const mpq_class& q) const { return polynomial(QPoly(q)); }

  Element add(const Element& a, const Element& b) const {
    if (a.den == b.den) return make(a.num + b.num, a.den);
    return make(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element neg(const Element& a) const { return Element{-a.num, a.den}; }
  Element mul(const Element& a, const Element& b) const {
    if (a.num.is_zero() || b.num.is_zero()) return Element{};
    return make(a.num * b.num, a.den * b.den);
  }

  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.num.is_zero(); }

  std::optional<Element> inverse(const Element& a) const {
    if (is_zero(a)) return std::nullopt;
    return make(a.den, a.num);
  }

  /// r(h(x)) for rational functions r and h.
  Element compose(const Element& r, const Element& h) const {
    return mul(evaluate(r.num, h), *inverse(evaluate(r.den, h)));
  }

  Element derivative(const Element& a) const {
    if (is_zero(a)) return a;
    return make(a.num.derivative() * a.den - a.num * a.den.derivative(), a.den * a.den);
  }

  Element apply_S(const Element& a) const {
    if (!twist_.substitution) return a;
    return compose(a, *twist_.substitution);
  }

  Element apply_D(const Element& a) const {
    Element result;
    if (twist_.ddx) result = derivative(a);
    if (twist_.inner_beta) result = add(result, mul(*twist_.inner_beta, sub(a, apply_S(a))));
    return result;
  }

  std::string format(const Element& a) const {
    if (a.den.is_one()) return a.num.str();
    return "(" + a.num.str() + ")/(" + a.den.str() + ")";
  }

  std::optional<Element> atom(std::string_view name) const {
    if (name != "x") return std::nullopt;
    return polynomial(QPoly::x());
  }

  std::string describe() const {
    std::string s = "Q(x)";
    if (twist_.substitution) s += ", S: x -> " + format(*twist_.substitution);
    if (twist_.ddx) s += ", D = d/dx";
    if (twist_.inner_beta) s += std::string(twist_.ddx ? " +" : ", D =") + " inner(" + format(*twist_.inner_beta) + ")";
    return s;
  }

  bool is_division_ring() const { return true; }

  /// (a x + b) / (x + c) or a x + b with small integers.
  Element random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<long> coef(-4, 4);
    std::uniform_int_distribution<int> shape(0, 2);
    QPoly num(std::vector<mpq_class>{mpq_class(coef(rng)), mpq_class(coef(rng))});
    if (shape(rng) == 0) return polynomial(num);
    QPoly den(std::vector<mpq_class>{mpq_class(coef(rng)), mpq_class(1)});
    return make(num, den);
  }

 private:
  Element evaluate(const QPoly& p, const Element& h) const {
    Element acc;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = add(mul(acc, h), from_rational(p.coeffs()[k]));
    return acc;
  }

  Twist twist_;
};

}  // namespace ore
