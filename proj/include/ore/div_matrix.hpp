#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ore/errors.hpp"
#include "ore/ring.hpp"
#include "ore/scalar.hpp"

namespace ore {

/// Dense matrix over a coefficient context; rows and columns from 0.
template <Ring R>
class DivMatrix {
 public:
  using Entry = Scalar<R>;

  DivMatrix(Context<R> ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, ctx_.zero()) {}

  static DivMatrix identity(const Context<R>& ctx, std::size_t n) {
    DivMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
    return m;
  }

  static DivMatrix diagonal(const Context<R>& ctx, const std::vector<Entry>& entries) {
    DivMatrix m(ctx, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  static DivMatrix from_rows(const Context<R>& ctx, const std::vector<std::vector<Entry>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    DivMatrix m(ctx, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const Context<R>& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Entry& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Entry& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Entry> row(std::size_t i) const {
    return std::vector<Entry>(data_.begin() + static_cast<long>(i * cols_),
                              data_.begin() + static_cast<long>((i + 1) * cols_));
  }

  /// The matrix with row i and column j removed.
  DivMatrix minor(std::size_t i, std::size_t j) const {
    DivMatrix m(ctx_, rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
        if (c == j) continue;
        m(mr, mc++) = (*this)(r, c);
      }
      ++mr;
    }
    return m;
  }

  /// Entrywise image under S (or D).
  DivMatrix map_S() const { return map([](const Entry& e) { return apply_S(e); }); }
  DivMatrix map_D() const { return map([](const Entry& e) { return apply_D(e); }); }

  template <class F>
  DivMatrix map(F&& f) const {
    DivMatrix m(ctx_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = f(data_[k]);
    return m;
  }

  friend DivMatrix operator*(const DivMatrix& a, const DivMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix dimensions do not match for product");
    DivMatrix m(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Entry& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend DivMatrix operator+(const DivMatrix& a, const DivMatrix& b) {
    a.check_shape(b);
    DivMatrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
  }

  friend DivMatrix operator-(const DivMatrix& a, const DivMatrix& b) {
    a.check_shape(b);
    DivMatrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
    return m;
  }

  friend bool operator==(const DivMatrix& a, const DivMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i && j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).str());
    return out;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) out += ", ";
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += (*this)(i, j).str();
      }
      out += "]";
    }
    return out + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const DivMatrix& m) { return os << m.str(); }

 private:
  void check_shape(const DivMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("matrix shapes differ");
  }

  Context<R> ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Entry> data_;
};

template <Ring R>
struct InversionResult {
  std::optional<DivMatrix<R>> inverse;
  /// When singular: nonzero coefficients c_i with sum_i c_i * row_i(A) = 0.
  std::vector<Scalar<R>> dependence;
};

/// Gauss-Jordan elimination with left row operations on [A | I].
template <Ring R>
InversionResult<R> gauss_invert(const DivMatrix<R>& a) {
  if (!a.is_square()) throw InvalidInput("only square matrices can be inverted");
  const std::size_t n = a.rows();
  const auto& ctx = a.context();
  DivMatrix<R> m = a;
  DivMatrix<R> aug = DivMatrix<R>::identity(ctx, n);
  auto swap_rows = [n](DivMatrix<R>& x, std::size_t r, std::size_t s) {
    for (std::size_t j = 0; j < n; ++j) std::swap(x(r, j), x(s, j));
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < n; ++col) {
    std::size_t sel = pivot_row;
    std::optional<Scalar<R>> inv;
    for (; sel < n; ++sel) {
      if (m(sel, col).is_zero()) continue;
      inv = m(sel, col).try_inverse();
      if (inv) break;
      if (ctx->is_division_ring()) break;
    }
    if (sel == n) continue;
    if (!inv) throw Unsupported("elimination met a nonzero non-invertible pivot");
    swap_rows(m, sel, pivot_row);
    swap_rows(aug, sel, pivot_row);
    for (std::size_t j = 0; j < n; ++j) {
      m(pivot_row, j) = *inv * m(pivot_row, j);
      aug(pivot_row, j) = *inv * aug(pivot_row, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      Scalar<R> factor = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= factor * m(pivot_row, j);
        aug(r, j) -= factor * aug(pivot_row, j);
      }
    }
    ++pivot_row;
  }
  if (pivot_row == n) return {std::move(aug), {}};
  // rows from pivot_row on are zero in m, so their multipliers witness dependence
  return {std::nullopt, aug.row(pivot_row)};
}

template <Ring R>
DivMatrix<R> invert(const DivMatrix<R>& a) {
  auto result = gauss_invert(a);
  if (!result.inverse) throw SingularMatrix("matrix has left linearly dependent rows");
  return *std::move(result.inverse);
}

/// |A|_{ij} = a_ij - r (A^{ij})^{-1} c, indices from 0.
template <Ring R>
Scalar<R> quasideterminant(const DivMatrix<R>& a, std::size_t i, std::size_t j) {
  if (!a.is_square()) throw InvalidInput("quasideterminants need a square matrix");
  const std::size_t n = a.rows();
  if (i >= n || j >= n) throw InvalidInput("quasideterminant index out of range");
  if (n == 1) return a(0, 0);
  auto minor_inv = gauss_invert(a.minor(i, j));
  if (!minor_inv.inverse) throw SingularMatrix("the minor A^{ij} is not invertible");
  DivMatrix<R> r(a.context(), 1, n - 1);
  DivMatrix<R> c(a.context(), n - 1, 1);
  for (std::size_t k = 0, m = 0; k < n; ++k) {
    if (k == j) continue;
    r(0, m++) = a(i, k);
  }
  for (std::size_t k = 0, m = 0; k < n; ++k) {
    if (k == i) continue;
    c(m++, 0) = a(k, j);
  }
  return a(i, j) - (r * *minor_inv.inverse * c)(0, 0);
}

}  // namespace ore
