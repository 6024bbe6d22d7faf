#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ore/errors.hpp"

namespace ore {

/// Hamilton's quaternions over Q.
///
/// Twists: S is the identity or conjugation x -> q x q^{-1} by a fixed
/// nonzero q; D is zero or the inner S-derivation x -> beta x - S(x) beta.
class Quaternions {
 public:
  struct Element {
    mpq_class w, x, y, z;  // w + x i + y j + z k
    friend bool operator==(const Element&, const Element&) = default;
  };

  struct Twist {
    std::optional<Element> inner_q;
    std::optional<Element> inner_beta;
  };

  Quaternions() = default;

  explicit Quaternions(Twist twist) : twist_(std::move(twist)) {
    if (twist_.inner_q) {
      if (is_zero(*twist_.inner_q)) throw InvalidInput("inner automorphism needs a nonzero quaternion");
      q_inverse_ = *inverse(*twist_.inner_q);
    }
    if (twist_.inner_beta && is_zero(*twist_.inner_beta)) twist_.inner_beta.reset();
  }

  const Twist& twist() const noexcept { return twist_; }

  static Element make(long w, long x, long y, long z) {
    return Element{mpq_class(w), mpq_class(x), mpq_class(y), mpq_class(z)};
  }

  Element zero() const { return Element{}; }
  Element one() const { return Element{1, 0, 0, 0}; }
  Element from_integer(const mpz_class& n) const { return Element{mpq_class(n), 0, 0, 0}; }

  Element add(const Element& a, const Element& b) const {
    return Element{a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  Element sub(const Element& a, const Element& b) const {
    return Element{a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  Element neg(const Element& a) const { return Element{-a.w, -a.x, -a.y, -a.z}; }
  Element mul(const Element& a, const Element& b) const {
    return Element{
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
  }

  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const {
    return sgn(a.w) == 0 && sgn(a.x) == 0 && sgn(a.y) == 0 && sgn(a.z) == 0;
  }

  static mpq_class norm(const Element& a) { return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z; }
  static mpq_class real_part(const Element& a) { return a.w; }
  static Element conjugate(const Element& a) { return Element{a.w, -a.x, -a.y, -a.z}; }

  std::optional<Element> inverse(const Element& a) const {
    if (is_zero(a)) return std::nullopt;
    mpq_class n = norm(a);
    return Element{a.w / n, -a.x / n, -a.y / n, -a.z / n};
  }

  Element apply_S(const Element& a) const {
    if (!twist_.inner_q) return a;
    return mul(mul(*twist_.inner_q, a), q_inverse_);
  }

  Element apply_D(const Element& a) const {
    if (!twist_.inner_beta) return Element{};
    return sub(mul(*twist_.inner_beta, a), mul(apply_S(a), *twist_.inner_beta));
  }

  std::string format(const Element& a) const {
    if (is_zero(a)) return "0";
    std::string out;
    auto term = [&out](const mpq_class& c, const char* unit) {
      if (sgn(c) == 0) return;
      mpq_class mag = abs(c);
      if (sgn(c) < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      if (*unit == '\0') {
        out += mag.get_str();
      } else if (mag == 1) {
        out += unit;
      } else if (mag.get_den() == 1) {
        out += mag.get_str() + unit;
      } else {
        out += mag.get_str() + "*" + unit;
      }
    };
    term(a.w, "");
    term(a.x, "i");
    term(a.y, "j");
    term(a.z, "k");
    return out;
  }

  std::optional<Element> atom(std::string_view name) const {
    if (name == "i") return Element{0, 1, 0, 0};
    if (name == "j") return Element{0, 0, 1, 0};
    if (name == "k") return Element{0, 0, 0, 1};
    return std::nullopt;
  }

  std::string describe() const {
    std::string s = "H(Q)";
    if (twist_.inner_q) s += ", S = inner(" + format(*twist_.inner_q) + ")";
    if (twist_.inner_beta) s += ", D = inner(" + format(*twist_.inner_beta) + ")";
    return s;
  }

  bool is_division_ring() const { return true; }

  /// Small integer coordinates in [-3, 3].
  Element random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<long> coef(-3, 3);
    return make(coef(rng), coef(rng), coef(rng), coef(rng));
  }

 private:
  Twist twist_;
  Element q_inverse_;
};

}  // namespace ore
