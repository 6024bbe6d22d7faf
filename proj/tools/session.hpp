#pragma once

#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <variant>
#include <vector>

#include "ore/errors.hpp"
#include "ore/rings/galois_field.hpp"
#include "ore/rings/quaternions.hpp"
#include "ore/rings/rational_functions.hpp"
#include "ore/scalar.hpp"

namespace cli {

struct SessionConfig {
  std::string field;
  std::string twist = "identity";
  std::string derivation = "zero";
  bool quaternion = false;
  bool ratfunc = false;
  bool json = false;
  bool strict = false;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::vector<std::string> candidates;
};

using AnyContext = std::variant<ore::Context<ore::GaloisField>, ore::Context<ore::Quaternions>,
                                ore::Context<ore::RationalFunctions>>;

namespace detail {

inline std::optional<std::string> after_prefix(const std::string& text, const std::string& prefix) {
  if (text.rfind(prefix, 0) != 0) return std::nullopt;
  return text.substr(prefix.size());
}

/// "w^3+w+1" -> {1, 1, 0, 1} reduced mod p.
inline std::vector<int> parse_modulus(int p, std::string text) {
  for (auto& ch : text)
    if (ch == 'w') ch = 'x';
  ore::Context<ore::RationalFunctions> q{ore::RationalFunctions{}};
  auto value = q.parse(text).value();
  if (value.den.degree() != 0) throw ore::InvalidInput("modulus must be a polynomial in w");
  std::vector<int> out;
  for (const auto& c : value.num.coeffs()) {
    mpq_class scaled = c / value.den.coeff(0);
    if (scaled.get_den() != 1) throw ore::InvalidInput("modulus coefficients must be integers");
    mpz_class r = scaled.get_num() % p;
    if (r < 0) r += p;
    out.push_back(static_cast<int>(r.get_si()));
  }
  return out;
}

inline ore::GaloisField base_field(const std::string& name) {
  if (name.empty() || name == "f4") return ore::GaloisField::f4();
  if (name == "f8") return ore::GaloisField::f8();
  if (name == "f9") return ore::GaloisField::f9();
  if (name == "f16") return ore::GaloisField::f16();
  static const std::regex custom(R"(custom\(\s*(\d+)\s*,(.+)\))");
  std::smatch m;
  if (!std::regex_match(name, m, custom)) throw ore::InvalidInput("unknown field '" + name + "'");
  int p = std::stoi(m[1]);
  return ore::GaloisField::create(p, parse_modulus(p, m[2]));
}

inline unsigned frobenius_power(const std::string& twist) {
  if (twist == "identity") return 0;
  if (twist == "frobenius") return 1;
  if (auto k = after_prefix(twist, "frobenius:")) return static_cast<unsigned>(std::stoul(*k));
  throw ore::InvalidInput("twist '" + twist + "' does not apply to finite fields");
}

inline ore::Context<ore::GaloisField> field_context(const SessionConfig& cfg) {
  ore::GaloisField base = base_field(cfg.field);
  ore::GaloisTwist twist;
  twist.frobenius_power = frobenius_power(cfg.twist);
  if (auto beta = after_prefix(cfg.derivation, "inner:")) {
    ore::Context<ore::GaloisField> plain{base};
    twist.derivation_beta = plain.parse(*beta).value();
  } else if (cfg.derivation != "zero") {
    throw ore::InvalidInput("derivation '" + cfg.derivation + "' does not apply to finite fields");
  }
  return ore::Context<ore::GaloisField>{base.with_twist(twist)};
}

inline ore::Context<ore::Quaternions> quaternion_context(const SessionConfig& cfg) {
  ore::Context<ore::Quaternions> plain{ore::Quaternions{}};
  ore::Quaternions::Twist twist;
  if (auto q = after_prefix(cfg.twist, "inner:")) {
    twist.inner_q = plain.parse(*q).value();
  } else if (cfg.twist != "identity") {
    throw ore::InvalidInput("twist '" + cfg.twist + "' does not apply to quaternions");
  }
  if (auto beta = after_prefix(cfg.derivation, "inner:")) {
    twist.inner_beta = plain.parse(*beta).value();
  } else if (cfg.derivation != "zero") {
    throw ore::InvalidInput("derivation '" + cfg.derivation + "' does not apply to quaternions");
  }
  return ore::Context<ore::Quaternions>{ore::Quaternions{twist}};
}

inline ore::Context<ore::RationalFunctions> ratfunc_context(const SessionConfig& cfg) {
  ore::Context<ore::RationalFunctions> plain{ore::RationalFunctions{}};
  ore::RationalFunctions::Twist twist;
  if (auto h = after_prefix(cfg.twist, "subst:")) {
    twist.substitution = plain.parse(*h).value();
  } else if (cfg.twist != "identity") {
    throw ore::InvalidInput("twist '" + cfg.twist + "' does not apply to Q(x)");
  }
  if (cfg.derivation == "ddx") {
    twist.ddx = true;
  } else if (auto beta = after_prefix(cfg.derivation, "inner:")) {
    twist.inner_beta = plain.parse(*beta).value();
  } else if (cfg.derivation != "zero") {
    throw ore::InvalidInput("unknown derivation '" + cfg.derivation + "'");
  }
  return ore::Context<ore::RationalFunctions>{ore::RationalFunctions{twist}};
}

}  // namespace detail

/// Finite field F_4 with S = id, D = 0 unless told otherwise.
inline AnyContext make_context(const SessionConfig& cfg) {
  int kinds = (cfg.quaternion ? 1 : 0) + (cfg.ratfunc ? 1 : 0) + (cfg.field.empty() ? 0 : 1);
  if (kinds > 1) throw ore::InvalidInput("choose at most one of --field, --quaternion, --ratfunc");
  if (cfg.quaternion) return detail::quaternion_context(cfg);
  if (cfg.ratfunc) return detail::ratfunc_context(cfg);
  return detail::field_context(cfg);
}

}  // namespace cli
