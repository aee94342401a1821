#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "multinv/error.hpp"

namespace multinv {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring.
///
/// Lattice elements are row vectors and matrices act on the right, so the
/// image of a vector `v` under `g` is `v * g`.
template <typename T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (long x : row)
        data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(std::span<const std::vector<T>> rows,
                          std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<std::vector<T>> row_vectors() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out.push_back(row_vector(i));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T &factor) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) += factor * (*this)(src, j);
  }
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T &factor) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(i, j) = -(*this)(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T &x) { return x == 0; });
  }

  Matrix &operator+=(const Matrix &o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  Matrix &operator*=(const T &s) {
    for (auto &x : data_)
      x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (aik == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  /// Canonical total order: shape first, then entries lexicographically.
  friend bool operator<(const Matrix &a, const Matrix &b) {
    if (a.rows_ != b.rows_)
      return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_)
      return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(),
                                        b.data_.begin(), b.data_.end());
  }

private:
  void check_same_shape(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Row vector times matrix.
template <typename T>
std::vector<T> operator*(std::span<const T> v, const Matrix<T> &m) {
  if (v.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "vector-matrix product shape");
  std::vector<T> out(m.cols(), T(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0)
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] += v[i] * m(i, j);
  }
  return out;
}
template <typename T>
std::vector<T> operator*(const std::vector<T> &v, const Matrix<T> &m) {
  return std::span<const T>(v) * m;
}

} // namespace multinv
