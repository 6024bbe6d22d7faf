#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ore/errors.hpp"

namespace ore::expr {

// Recursive-descent parser shared by the element grammar and the polynomial
// grammar. Values are built through an `Ops` object:
//
//   T one();                      T from_integer(const mpz_class&);
//   std::optional<T> atom(std::string_view name);
//   T bracket(std::string_view text);        // "[...]" literal, may throw
//   T add(const T&, const T&);  T sub(...);  T mul(...);  T neg(const T&);
//   T divide(const T&, const T&);            // a * b^{-1}, may throw
//
// Grammar:
//   expr    := sign? term (('+' | '-') term)*
//   term    := power (('*' | '/') power | power)*      juxtaposition multiplies
//   power   := primary ('^' digits)?
//   primary := digits | letter | '(' expr ')' | '[' ... ']'
//
// Identifiers are single letters, so "ij" reads as i*j and "2w" as 2*w.
// U+2212 (minus sign) is accepted as '-'.
template <class T, class Ops>
class Parser {
 public:
  Parser(std::string_view text, const Ops& ops) : text_(text), ops_(ops) {}

  T parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    T value = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  // Returns '+', '-', or 0; consumes nothing.
  char peek_sign() {
    skip_space();
    if (at_end()) return 0;
    char c = text_[pos_];
    if (c == '+' || c == '-') return c;
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") return '-';
    return 0;
  }

  void consume_sign() { pos_ += (text_[pos_] == '+' || text_[pos_] == '-') ? 1 : 3; }

  T expression() {
    T value = [&] {
      char sign = peek_sign();
      if (sign == 0) return term();
      consume_sign();
      T first = term();
      return sign == '-' ? ops_.neg(first) : first;
    }();
    for (char sign = peek_sign(); sign != 0; sign = peek_sign()) {
      consume_sign();
      T rhs = term();
      value = sign == '+' ? ops_.add(value, rhs) : ops_.sub(value, rhs);
    }
    return value;
  }

  bool starts_primary() {
    skip_space();
    if (at_end()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '[';
  }

  T term() {
    T value = power();
    while (true) {
      skip_space();
      if (at_end()) break;
      char c = text_[pos_];
      if (c == '*') {
        ++pos_;
        value = ops_.mul(value, power());
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        T divisor = power();
        try {
          value = ops_.divide(value, divisor);
        } catch (const OreError& e) {
          throw ParseError(e.what(), at);
        }
      } else if (starts_primary()) {
        value = ops_.mul(value, power());
      } else {
        break;
      }
    }
    return value;
  }

  T power() {
    T base = primary();
    skip_space();
    if (at_end() || text_[pos_] != '^') return base;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    unsigned long exponent = std::stoul(std::string(text_.substr(start, pos_ - start)));
    T result = ops_.one();
    T square = base;
    while (exponent > 0) {
      if (exponent & 1UL) result = ops_.mul(result, square);
      exponent >>= 1;
      if (exponent > 0) square = ops_.mul(square, square);
    }
    return result;
  }

  T primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ops_.from_integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_++;
      auto value = ops_.atom(text_.substr(at, 1));
      if (!value) throw ParseError(std::string("unknown symbol '") + c + "'", at);
      return *std::move(value);
    }
    if (c == '(') {
      ++pos_;
      T inner = expression();
      skip_space();
      if (at_end() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      std::size_t start = pos_;
      int depth = 0;
      do {
        if (text_[pos_] == '[') ++depth;
        if (text_[pos_] == ']') --depth;
        ++pos_;
      } while (depth > 0 && !at_end());
      if (depth != 0) throw ParseError("unbalanced '['", start);
      try {
        return ops_.bracket(text_.substr(start, pos_ - start));
      } catch (const ParseError&) {
        throw;
      } catch (const OreError& e) {
        throw ParseError(e.what(), start);
      }
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ops& ops_;
  std::size_t pos_ = 0;
};

template <class T, class Ops>
T parse(std::string_view text, const Ops& ops) {
  return Parser<T, Ops>(text, ops).parse();
}

/// Splits "[a, b, [c, d]]" into its top-level items "a", "b", "[c, d]".
inline std::vector<std::string_view> split_bracket_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("expected a bracketed list", 0);
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::string_view> items;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < body.size(); ++k) {
    char c = body[k];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(trim(body.substr(start, k - start)));
      start = k + 1;
    }
  }
  if (!trim(body).empty()) items.push_back(trim(body.substr(start)));
  for (auto item : items)
    if (item.empty()) throw ParseError("empty list item", 0);
  return items;
}

}  // namespace ore::expr
