#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ore/errors.hpp"

namespace ore {

/// Dense univariate polynomial over Q in the variable x, lowest degree first.
/// Trailing zeros are always stripped, so the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  QPoly(const mpq_class& constant) {  // NOLINT: implicit constants read naturally
    if (sgn(constant) != 0) c_.push_back(constant);
  }

  static QPoly x() { return QPoly(std::vector<mpq_class>{0, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }
  mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return QPoly(std::move(out));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return QPoly(std::move(out));
  }
  QPoly operator-() const {
    QPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(out));
  }

  QPoly scaled(const mpq_class& s) const {
    if (sgn(s) == 0) return {};
    QPoly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  QPoly monic() const { return is_zero() ? *this : scaled(1 / leading()); }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<mpq_class> rem = a.c_;
    std::vector<mpq_class> quo(a.c_.size() - b.c_.size() + 1, 0);
    const mpq_class lead_inv = 1 / b.leading();
    for (std::size_t k = rem.size(); k-- >= b.c_.size();) {
      if (sgn(rem[k]) == 0) continue;
      mpq_class factor = rem[k] * lead_inv;
      std::size_t shift = k - (b.c_.size() - 1);
      quo[shift] = factor;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= factor * b.c_[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
  }

  /// Monic gcd (zero if both inputs are zero).
  static QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
      QPoly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  QPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * static_cast<long>(k);
    return QPoly(std::move(out));
  }

  /// p(-x).
  QPoly reflected() const {
    QPoly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
  }

  /// Formats with variable `var`, e.g. "x^2-1/2*x+3".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const mpq_class& v = c_[k];
      if (sgn(v) == 0) continue;
      mpq_class mag = abs(v);
      if (sgn(v) < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      if (k == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  /// True when the formatted text is a single signed or unsigned monomial.
  bool is_monomial() const {
    int terms = 0;
    for (const auto& v : c_)
      if (sgn(v) != 0) ++terms;
    return terms <= 1;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<mpq_class> c_;
};

}  // namespace ore
