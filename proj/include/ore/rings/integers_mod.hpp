#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ore/errors.hpp"

namespace ore {

/// Z/nZ with trivial twist; a field exactly when n is prime.
class IntegersMod {
 public:
  using Element = std::uint64_t;

  explicit IntegersMod(std::uint64_t n) : n_(n) {
    if (n < 2) throw InvalidInput("modulus must be at least 2");
    if (n > (1ull << 31)) throw InvalidInput("modulus too large");
  }

  std::uint64_t modulus() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return n_; }
  Element element_at(std::uint64_t index) const { return index % n_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const mpz_class& v) const {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(n_));
    if (r < 0) r += static_cast<unsigned long>(n_);
    return r.get_ui();
  }

  Element add(Element a, Element b) const { return (a + b) % n_; }
  Element sub(Element a, Element b) const { return (a + n_ - b) % n_; }
  Element mul(Element a, Element b) const { return (a * b) % n_; }
  Element neg(Element a) const { return (n_ - a) % n_; }
  bool equal(Element a, Element b) const { return a == b; }
  bool is_zero(Element a) const { return a == 0; }

  std::optional<Element> inverse(Element a) const {
    if (std::gcd(a, n_) != 1) return std::nullopt;
    mpz_class r;
    mpz_class base(static_cast<unsigned long>(a));
    mpz_class mod(static_cast<unsigned long>(n_));
    mpz_invert(r.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
    return r.get_ui();
  }

  Element apply_S(Element a) const { return a; }
  Element apply_D(Element) const { return 0; }

  std::string format(Element a) const { return std::to_string(a); }
  std::optional<Element> atom(std::string_view) const { return std::nullopt; }
  std::string describe() const { return "Z/" + std::to_string(n_) + "Z"; }

  bool is_division_ring() const {
    for (std::uint64_t d = 2; d * d <= n_; ++d)
      if (n_ % d == 0) return false;
    return true;
  }

  Element random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint64_t> pick(0, n_ - 1);
    return pick(rng);
  }

 private:
  std::uint64_t n_;
};

}  // namespace ore
