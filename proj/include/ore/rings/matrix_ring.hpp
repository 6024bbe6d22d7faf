#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ore/errors.hpp"
#include "ore/expression.hpp"
#include "ore/ring.hpp"

namespace ore {

namespace detail {

/// Parser operations acting directly on payloads of a commutative base.
template <Ring B>
struct BaseOps {
  const B& base;

  typename B::Element one() const { return base.one(); }
  typename B::Element from_integer(const mpz_class& n) const { return base.from_integer(n); }
  std::optional<typename B::Element> atom(std::string_view name) const { return base.atom(name); }
  typename B::Element bracket(std::string_view) const { throw ParseError("nested bracket in matrix entry", 0); }
  typename B::Element add(const typename B::Element& a, const typename B::Element& b) const { return base.add(a, b); }
  typename B::Element sub(const typename B::Element& a, const typename B::Element& b) const { return base.sub(a, b); }
  typename B::Element mul(const typename B::Element& a, const typename B::Element& b) const { return base.mul(a, b); }
  typename B::Element neg(const typename B::Element& a) const { return base.neg(a); }
  typename B::Element divide(const typename B::Element& a, const typename B::Element& b) const {
    auto inv = base.inverse(b);
    if (!inv) throw NotInvertible("division by a non-unit");
    return base.mul(a, *inv);
  }
};

}  // namespace detail

/// n x n matrices over a commutative ring B, with S = id and D = 0.
///
/// Elements are row-major entry lists. Inversion is partial: it succeeds
/// exactly when the determinant is a unit of B.
template <Ring B>
class MatrixRing {
 public:
  using Base = B;
  using Entry = typename B::Element;
  using Element = std::vector<Entry>;

  MatrixRing(B base, std::size_t n) : base_(std::move(base)), n_(n) {
    if (n == 0) throw InvalidInput("matrix size must be positive");
  }

  const B& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return n_; }

  const Entry& at(const Element& a, std::size_t i, std::size_t j) const { return a[i * n_ + j]; }

  Element make(const std::vector<std::vector<Entry>>& rows) const {
    if (rows.size() != n_) throw InvalidInput("wrong number of matrix rows");
    Element out;
    for (const auto& row : rows) {
      if (row.size() != n_) throw InvalidInput("wrong number of matrix columns");
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }

  Element zero() const { return Element(n_ * n_, base_.zero()); }
  Element one() const { return scalar(base_.one()); }
  Element from_integer(const mpz_class& v) const { return scalar(base_.from_integer(v)); }

  Element scalar(const Entry& c) const {
    Element out = zero();
    for (std::size_t i = 0; i < n_; ++i) out[i * n_ + i] = c;
    return out;
  }

  Element add(const Element& a, const Element& b) const {
    Element out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = base_.add(a[k], b[k]);
    return out;
  }
  Element sub(const Element& a, const Element& b) const {
    Element out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = base_.sub(a[k], b[k]);
    return out;
  }
  Element neg(const Element& a) const {
    Element out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = base_.neg(a[k]);
    return out;
  }
  Element mul(const Element& a, const Element& b) const {
    Element out = zero();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const Entry& aik = a[i * n_ + k];
        if (base_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < n_; ++j)
          out[i * n_ + j] = base_.add(out[i * n_ + j], base_.mul(aik, b[k * n_ + j]));
      }
    return out;
  }

  bool equal(const Element& a, const Element& b) const {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!base_.equal(a[k], b[k])) return false;
    return true;
  }
  bool is_zero(const Element& a) const {
    for (const auto& e : a)
      if (!base_.is_zero(e)) return false;
    return true;
  }

  Entry determinant(const Element& a) const {
    std::vector<std::size_t> cols(n_);
    for (std::size_t j = 0; j < n_; ++j) cols[j] = j;
    return minor_det(a, 0, cols);
  }

  /// adj(a) / det(a) when det(a) is a unit.
  std::optional<Element> inverse(const Element& a) const {
    auto det_inv = base_.inverse(determinant(a));
    if (!det_inv) return std::nullopt;
    if (n_ == 1) return Element{*det_inv};
    Element out(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        // cofactor C_ji lands at position (i, j) of the adjugate
        Element sub_matrix;
        for (std::size_t r = 0; r < n_; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0; c < n_; ++c)
            if (c != i) sub_matrix.push_back(a[r * n_ + c]);
        }
        MatrixRing smaller(base_, n_ - 1);
        Entry cof = smaller.determinant(sub_matrix);
        if ((i + j) % 2 == 1) cof = base_.neg(cof);
        out[i * n_ + j] = base_.mul(cof, *det_inv);
      }
    return out;
  }

  Element apply_S(const Element& a) const { return a; }
  Element apply_D(const Element&) const { return zero(); }

  std::string format(const Element& a) const {
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) out += ",";
      out += "[";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) out += ",";
        out += base_.format(a[i * n_ + j]);
      }
      out += "]";
    }
    return out + "]";
  }

  std::optional<Element> atom(std::string_view) const { return std::nullopt; }

  Element parse_bracket(std::string_view text) const {
    auto rows = expr::split_bracket_list(text);
    if (rows.size() != n_) throw ParseError("expected " + std::to_string(n_) + " matrix rows", 0);
    Element out;
    for (auto row : rows) {
      auto items = expr::split_bracket_list(row);
      if (items.size() != n_) throw ParseError("expected " + std::to_string(n_) + " entries per row", 0);
      for (auto item : items) out.push_back(expr::parse<Entry>(item, detail::BaseOps<B>{base_}));
    }
    return out;
  }

  std::string describe() const { return "M_" + std::to_string(n_) + "(" + base_.describe() + ")"; }
  bool is_division_ring() const { return n_ == 1 && base_.is_division_ring(); }

  std::uint64_t order() const
    requires FiniteRing<B>
  {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n_ * n_; ++k) total *= base_.order();
    return total;
  }

  Element element_at(std::uint64_t index) const
    requires FiniteRing<B>
  {
    Element out(n_ * n_);
    const std::uint64_t q = base_.order();
    for (std::size_t k = n_ * n_; k-- > 0;) {
      out[k] = base_.element_at(index % q);
      index /= q;
    }
    return out;
  }

  Element random(std::mt19937_64& rng) const
    requires SampleableRing<B>
  {
    Element out(n_ * n_);
    for (auto& e : out) e = base_.random(rng);
    return out;
  }

 private:
  Entry minor_det(const Element& a, std::size_t row, const std::vector<std::size_t>& cols) const {
    if (cols.empty()) return base_.one();
    Entry total = base_.zero();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Entry& e = a[row * n_ + cols[k]];
      if (base_.is_zero(e)) continue;
      std::vector<std::size_t> rest;
      for (std::size_t m = 0; m < cols.size(); ++m)
        if (m != k) rest.push_back(cols[m]);
      Entry term = base_.mul(e, minor_det(a, row + 1, rest));
      total = k % 2 == 0 ? base_.add(total, term) : base_.sub(total, term);
    }
    return total;
  }

  B base_;
  std::size_t n_;
};

}  // namespace ore
