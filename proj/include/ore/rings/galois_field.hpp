#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ore/errors.hpp"

namespace ore {

/// S = Frobenius^frobenius_power; D = inner S-derivation by derivation_beta
/// (given as a payload index, 0 meaning D = 0).
struct GaloisTwist {
  unsigned frobenius_power = 0;
  std::uint32_t derivation_beta = 0;
};

/// F_q = F_p[w]/(m(w)) with a Frobenius power S(x) = x^{p^k} and an inner
/// S-derivation D(x) = beta x - S(x) beta.
///
/// An element is stored as the integer whose base-p digits are its
/// coefficients on 1, w, ..., w^{n-1}, so the payload is canonical and the
/// index used by `element_at` is the payload itself.
class GaloisField {
 public:
  using Element = std::uint32_t;

  using Twist = GaloisTwist;

  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// `modulus` lists the coefficients of a monic irreducible m(w), lowest first.
  static GaloisField create(int p, std::vector<int> modulus, Twist twist = {}) {
    auto tables = build_tables(p, std::move(modulus));
    GaloisField field(std::move(tables), Twist{});
    return field.with_twist(twist);
  }

  static GaloisField f4(Twist twist = {}) { return create(2, {1, 1, 1}, twist); }
  static GaloisField f8(Twist twist = {}) { return create(2, {1, 1, 0, 1}, twist); }
  static GaloisField f9(Twist twist = {}) { return create(3, {1, 0, 1}, twist); }
  static GaloisField f16(Twist twist = {}) { return create(2, {1, 1, 0, 0, 1}, twist); }

  GaloisField with_twist(Twist twist) const {
    if (twist.derivation_beta >= tables_->q) throw InvalidInput("derivation element outside the field");
    GaloisField field(tables_, twist);
    field.twist_.frobenius_power %= static_cast<unsigned>(tables_->n);
    field.frobenius_exponent_ = 1;
    for (unsigned k = 0; k < field.twist_.frobenius_power; ++k)
      field.frobenius_exponent_ = (field.frobenius_exponent_ * static_cast<std::uint64_t>(tables_->p)) % (tables_->q - 1);
    return field;
  }

  const Twist& twist() const noexcept { return twist_; }
  int prime() const noexcept { return tables_->p; }
  int dimension() const noexcept { return tables_->n; }
  std::uint64_t order() const noexcept { return tables_->q; }
  const std::vector<int>& modulus() const noexcept { return tables_->modulus; }
  Element element_at(std::uint64_t index) const { return static_cast<Element>(index); }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element from_integer(const mpz_class& n) const {
    mpz_class r = n % tables_->p;
    if (r < 0) r += tables_->p;
    return static_cast<Element>(r.get_ui());
  }

  Element add(Element a, Element b) const {
    const int p = tables_->p;
    if (p == 2) return a ^ b;
    Element result = 0;
    Element place = 1;
    for (int k = 0; k < tables_->n; ++k) {
      result += static_cast<Element>(((a % p) + (b % p)) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return result;
  }

  Element neg(Element a) const {
    const int p = tables_->p;
    if (p == 2) return a;
    Element result = 0;
    Element place = 1;
    for (int k = 0; k < tables_->n; ++k) {
      result += static_cast<Element>((p - static_cast<int>(a % p)) % p) * place;
      a /= p;
      place *= p;
    }
    return result;
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }

  bool equal(Element a, Element b) const { return a == b; }
  bool is_zero(Element a) const { return a == 0; }

  std::optional<Element> inverse(Element a) const {
    if (a == 0) return std::nullopt;
    const std::uint32_t cyc = tables_->q - 1;
    return tables_->exp[(cyc - tables_->log[a]) % cyc];
  }

  /// x -> x^{p^k} for an arbitrary k.
  Element frobenius(Element a, unsigned k) const {
    if (a == 0) return 0;
    std::uint64_t e = 1;
    for (unsigned j = 0; j < k % static_cast<unsigned>(tables_->n); ++j) e = (e * tables_->p) % (tables_->q - 1);
    return tables_->exp[(tables_->log[a] * e) % (tables_->q - 1)];
  }

  Element apply_S(Element a) const {
    if (a == 0 || twist_.frobenius_power == 0) return a;
    return tables_->exp[(tables_->log[a] * frobenius_exponent_) % (tables_->q - 1)];
  }

  Element apply_D(Element a) const {
    if (twist_.derivation_beta == 0) return 0;
    return mul(twist_.derivation_beta, sub(a, apply_S(a)));
  }

  std::vector<int> coordinates(Element a) const {
    std::vector<int> digits(tables_->n);
    for (int k = 0; k < tables_->n; ++k) {
      digits[k] = static_cast<int>(a % tables_->p);
      a /= tables_->p;
    }
    return digits;
  }

  Element from_coordinates(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != tables_->n) throw InvalidInput("coordinate vector has wrong length");
    Element result = 0;
    for (int k = tables_->n - 1; k >= 0; --k) {
      int d = digits[k] % tables_->p;
      if (d < 0) d += tables_->p;
      result = result * tables_->p + static_cast<Element>(d);
    }
    return result;
  }

  std::string format(Element a) const {
    if (a == 0) return "0";
    auto digits = coordinates(a);
    std::string out;
    for (int k = tables_->n - 1; k >= 0; --k) {
      int d = digits[k];
      if (d == 0) continue;
      if (!out.empty()) out += "+";
      if (k == 0) {
        out += std::to_string(d);
        continue;
      }
      if (d != 1) out += std::to_string(d) + "*";
      out += "w";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  std::optional<Element> atom(std::string_view name) const {
    if (name != "w") return std::nullopt;
    return tables_->generator;
  }

  std::string describe() const {
    std::string m;
    for (int k = static_cast<int>(tables_->modulus.size()) - 1; k >= 0; --k) {
      int c = tables_->modulus[k];
      if (c == 0) continue;
      if (!m.empty()) m += "+";
      if (k == 0 || c != 1) m += std::to_string(c);
      if (k > 0) m += k == 1 ? "w" : "w^" + std::to_string(k);
    }
    std::string s = "F_" + std::to_string(tables_->q) + " = F_" + std::to_string(tables_->p) + "[w]/(" + m + ")";
    if (twist_.frobenius_power != 0) s += ", S = Frobenius^" + std::to_string(twist_.frobenius_power);
    if (twist_.derivation_beta != 0) s += ", D = inner(" + format(twist_.derivation_beta) + ")";
    return s;
  }

  bool is_division_ring() const { return true; }

  Element random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> pick(0, tables_->q - 1);
    return pick(rng);
  }

 private:
  struct Tables {
    int p = 0;
    int n = 0;
    std::uint32_t q = 0;
    std::vector<int> modulus;
    std::vector<Element> exp;  // length 2(q-1) so products of logs need no reduction
    std::vector<std::uint32_t> log;
    Element generator = 0;  // the class of w
  };

  GaloisField(std::shared_ptr<const Tables> tables, Twist twist) : tables_(std::move(tables)), twist_(twist) {}

  using Digits = std::vector<int>;

  static Digits poly_mulmod(const Digits& a, const Digits& b, const std::vector<int>& m, int p) {
    const std::size_t n = m.size() - 1;
    std::vector<long> prod(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) prod[i + j] += static_cast<long>(a[i]) * b[j];
    for (std::size_t k = 2 * n - 1; k >= n; --k) {
      long c = prod[k] % p;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= n; ++j) prod[k - n + j] -= c * m[j];
    }
    Digits out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<int>(((prod[k] % p) + p) % p);
    return out;
  }

  // Remainder of a(w) modulo b(w) over F_p, b monic.
  static bool divides(const std::vector<int>& b, std::vector<int> a, int p) {
    const std::size_t db = b.size() - 1;
    for (std::size_t k = a.size(); k-- > db;) {
      int c = ((a[k] % p) + p) % p;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = ((a[k - db + j] - c * b[j]) % p + p) % p;
    }
    for (std::size_t k = 0; k < db; ++k)
      if (a[k] % p != 0) return false;
    return true;
  }

  static bool is_irreducible(const std::vector<int>& m, int p) {
    const int n = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
      long count = 1;
      for (int k = 0; k < d; ++k) count *= p;
      for (long index = 0; index < count; ++index) {
        std::vector<int> candidate(d + 1, 0);
        long rest = index;
        for (int k = 0; k < d; ++k) {
          candidate[k] = static_cast<int>(rest % p);
          rest /= p;
        }
        candidate[d] = 1;
        if (divides(candidate, m, p)) return false;
      }
    }
    return true;
  }

  static std::shared_ptr<const Tables> build_tables(int p, std::vector<int> modulus) {
    if (p < 2) throw InvalidInput("characteristic must be a prime");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InvalidInput(std::to_string(p) + " is not prime");
    if (modulus.size() < 2) throw InvalidInput("modulus must have degree at least 1");
    for (int& c : modulus) c = ((c % p) + p) % p;
    if (modulus.back() != 1) throw InvalidInput("modulus must be monic");
    if (!is_irreducible(modulus, p)) throw InvalidInput("modulus is reducible over F_" + std::to_string(p));

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->n = static_cast<int>(modulus.size()) - 1;
    std::uint64_t q = 1;
    for (int k = 0; k < t->n; ++k) {
      q *= static_cast<std::uint64_t>(p);
      if (q > kMaxOrder) throw InvalidInput("field order exceeds the supported table size");
    }
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = modulus;

    auto encode = [&](const Digits& d) {
      Element e = 0;
      for (int k = t->n - 1; k >= 0; --k) e = e * p + static_cast<Element>(d[k]);
      return e;
    };
    auto decode = [&](Element e) {
      Digits d(t->n);
      for (int k = 0; k < t->n; ++k) {
        d[k] = static_cast<int>(e % p);
        e /= p;
      }
      return d;
    };

    // Class of w: for n = 1 it is the root -m_0 of the linear modulus.
    if (t->n == 1) {
      t->generator = static_cast<Element>((p - modulus[0]) % p);
    } else {
      t->generator = static_cast<Element>(p);
    }

    const std::uint32_t cyc = t->q - 1;
    t->exp.assign(2 * static_cast<std::size_t>(cyc == 0 ? 1 : cyc), 0);
    t->log.assign(t->q, 0);
    Digits one(t->n, 0);
    one[0] = 1;
    for (Element g = 1; g < t->q; ++g) {
      Digits gd = decode(g);
      Digits power = one;
      std::uint32_t k = 0;
      bool primitive = true;
      std::vector<Element> powers;
      powers.reserve(cyc);
      do {
        powers.push_back(encode(power));
        power = poly_mulmod(power, gd, modulus, p);
        ++k;
        if (encode(power) == 1 && k < cyc) {
          primitive = false;
          break;
        }
      } while (k < cyc);
      if (!primitive) continue;
      for (std::uint32_t j = 0; j < cyc; ++j) {
        t->exp[j] = powers[j];
        t->exp[j + cyc] = powers[j];
        t->log[powers[j]] = j;
      }
      return t;
    }
    // q = 2: the multiplicative group is trivial.
    t->exp.assign(2, 1);
    t->log[1] = 0;
    return t;
  }

  std::shared_ptr<const Tables> tables_;
  Twist twist_;
  std::uint64_t frobenius_exponent_ = 1;
};

}  // namespace ore
