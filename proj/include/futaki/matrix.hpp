#pragma once

// Dense exact linear algebra over a field type T.  T must provide the usual
// arithmetic operators, construction from int, and a free is_zero(const T&).
// Instantiated for Rational (QMatrix) and for the parameter fraction field.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "futaki/rational.hpp"

namespace futaki {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw DomainError("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw DomainError("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Appends the rows of `other` below this matrix (column counts must agree).
  void append_rows(const Matrix& other) {
    if (rows_ == 0 && cols_ == 0) {
      *this = other;
      return;
    }
    if (other.cols_ != cols_) throw DomainError("append_rows: column mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

template <class T>
struct Echelon {
  Matrix<T> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; the pivot of each column is the first nonzero
/// entry at or below the current row.  `on_pivot` sees every pivot before it
/// is inverted (callers over a parameter field record where pivots vanish).
template <class T>
Echelon<T> row_reduce(Matrix<T> m, const std::function<void(const T&)>& on_pivot = {}) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    if (on_pivot) on_pivot(m(row, col));
    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis of the right null space.  One vector per free column, in column
/// order, scaled so that its first nonzero entry is 1.  The basis depends
/// only on the row space of `m`.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    std::size_t lead = 0;
    while (is_zero(v[lead])) ++lead;
    if (!(v[lead] == T(1))) {
      const T inv = T(1) / v[lead];
      for (auto& x : v) x *= inv;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Particular solution of a·x = b (free variables set to zero), or nullopt.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, std::span<const T> b,
                                    const std::function<void(const T&)>& on_pivot = {}) {
  if (b.size() != a.rows()) throw DomainError("solve: right-hand side length mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto ech = row_reduce(std::move(aug), on_pivot);
  std::vector<T> x(a.cols(), T(0));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == a.cols()) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced(i, a.cols());
  }
  return x;
}

/// Basis of the +1 eigenspace, ker(m - I).
std::vector<QVector> fixed_subspace(const QMatrix& m);

/// True when v lies in the span of `basis` (all vectors of equal length).
bool in_span(const std::vector<QVector>& basis, const QVector& v);

/// Intersection of the kernels of several matrices with equal column count.
std::vector<QVector> common_kernel(const std::vector<QMatrix>& blocks, std::size_t cols);

std::string to_string(const QMatrix& m);

}  // namespace futaki
