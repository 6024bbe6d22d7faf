#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ore/errors.hpp"

namespace ore::fp {

using Vec = std::vector<int>;

inline int mod(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline int inverse_mod(int a, int p) {
  // p is prime, so a^{p-2} is the inverse
  long result = 1;
  long base = mod(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

/// A subspace of F_p^n held in reduced row echelon form, so two subspaces
/// are equal exactly when their `rows()` are equal.
class Subspace {
 public:
  Subspace(int p, std::size_t n) : p_(p), n_(n) {}

  static Subspace span(int p, std::size_t n, const std::vector<Vec>& vectors) {
    Subspace s(p, n);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  int prime() const noexcept { return p_; }
  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }

  /// Reduces v against the echelon rows; zero result means v is in the span.
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      int c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n_; ++k) v[k] = mod(v[k] - static_cast<long>(c) * rows_[r][k], p_);
    }
    return v;
  }

  bool contains(const Vec& v) const {
    for (int c : reduce(v))
      if (c != 0) return false;
    return true;
  }

  /// Adds v to the span; returns false if it was already there.
  bool insert(const Vec& input) {
    if (input.size() != n_) throw InvalidInput("vector of wrong length");
    Vec v = input;
    for (auto& c : v) c = mod(c, p_);
    v = reduce(std::move(v));
    std::size_t pivot = 0;
    while (pivot < n_ && v[pivot] == 0) ++pivot;
    if (pivot == n_) return false;
    int inv = inverse_mod(v[pivot], p_);
    for (auto& c : v) c = static_cast<int>(static_cast<long>(c) * inv % p_);
    for (auto& row : rows_) {
      int c = row[pivot];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n_; ++k) row[k] = mod(row[k] - static_cast<long>(c) * v[k], p_);
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + static_cast<long>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(at), pivot);
    return true;
  }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.rows_)
      if (!contains(v)) return false;
    return true;
  }

  /// Every vector of the subspace (p^dim of them).
  std::vector<Vec> elements() const {
    std::vector<Vec> out;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < dim(); ++k) total *= static_cast<std::uint64_t>(p_);
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vec v(n_, 0);
      std::uint64_t rest = idx;
      for (const auto& row : rows_) {
        int c = static_cast<int>(rest % static_cast<std::uint64_t>(p_));
        rest /= static_cast<std::uint64_t>(p_);
        if (c == 0) continue;
        for (std::size_t k = 0; k < n_; ++k) v[k] = mod(v[k] + static_cast<long>(c) * row[k], p_);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.p_ == b.p_ && a.rows_ == b.rows_; }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.rows_ < b.rows_; }

 private:
  int p_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Kernel of the linear map F_p^n -> F_p^m whose k-th column is images[k].
inline Subspace kernel(int p, std::size_t n, const std::vector<Vec>& images) {
  if (images.size() != n) throw InvalidInput("kernel needs one image per basis vector");
  const std::size_t m = n == 0 ? 0 : images[0].size();
  // Row-reduce the m x n matrix, then read off the null space.
  std::vector<Vec> a(m, Vec(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < m; ++r) a[r][k] = mod(images[k][r], p);
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    int inv = inverse_mod(a[row][col], p);
    for (auto& c : a[row]) c = static_cast<int>(static_cast<long>(c) * inv % p);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      int c = a[r][col];
      for (std::size_t k = 0; k < n; ++k) a[r][k] = mod(a[r][k] - static_cast<long>(c) * a[row][k], p);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  Subspace out(p, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = mod(-a[r][free], p);
    out.insert(v);
  }
  return out;
}

}  // namespace ore::fp
