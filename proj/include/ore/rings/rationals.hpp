#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ore {

/// The field Q with trivial twist (S = id, D = 0).
class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const mpz_class& n) const { return Element(n); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }

  std::optional<Element> inverse(const Element& a) const {
    if (is_zero(a)) return std::nullopt;
    return Element(1 / a);
  }

  Element apply_S(const Element& a) const { return a; }
  Element apply_D(const Element&) const { return 0; }

  std::string format(const Element& a) const { return a.get_str(); }
  std::optional<Element> atom(std::string_view) const { return std::nullopt; }
  std::string describe() const { return "Q"; }
  bool is_division_ring() const { return true; }

  Element random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    Element r(num(rng), den(rng));
    r.canonicalize();
    return r;
  }
};

}  // namespace ore
