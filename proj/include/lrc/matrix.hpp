#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

template <class K>
using Vector = std::vector<K>;

// Dense row-major matrix over an exact field. Acts on column vectors.
template <class K>
class Matrix {
 public:
  using Scalar = K;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count != rows*cols");
  }

  static Matrix identity(std::size_t n, const K& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  // Rows of the result are the given vectors.
  static Matrix from_rows(std::size_t cols, const std::vector<Vector<K>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged input");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vector<K>>& cols) {
    return from_rows(rows, cols).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const K> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector<K> row_vector(std::size_t r) const { return Vector<K>(row(r).begin(), row(r).end()); }
  Vector<K> column(std::size_t c) const {
    Vector<K> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  const std::vector<K>& entries() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!lrc::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vector<K> apply(std::span<const K> v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vector<K> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      K acc{};
      for (std::size_t c = 0; c < cols_; ++c)
        if (!lrc::is_zero(v[c]) && !lrc::is_zero((*this)(r, c))) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (lrc::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!lrc::is_zero(b(k, j))) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a += b;
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a -= b;
    return a;
  }
  Matrix& operator+=(const Matrix& b) {
    check_same_shape(b);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += b.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& b) {
    check_same_shape(b);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= b.data_[i];
    return *this;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }
  friend Matrix operator*(const K& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  // Adds `scale * block` into the window whose top-left corner is (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block, long scale = 1) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
      throw std::out_of_range("Matrix::add_block: block out of range");
    for (std::size_t r = 0; r < block.rows_; ++r)
      for (std::size_t c = 0; c < block.cols_; ++c) {
        const K& x = block(r, c);
        if (lrc::is_zero(x)) continue;
        (*this)(r0 + r, c0 + c) += scale == 1 ? x : times(x, scale);
      }
  }

  Matrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix m(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
      for (std::size_t c = 0; c < col_idx.size(); ++c) m(r, c) = (*this)(row_idx[r], col_idx[c]);
    return m;
  }

  Matrix hstack(const Matrix& b) const {
    if (rows_ != b.rows_) throw std::invalid_argument("Matrix::hstack: row mismatch");
    Matrix m(rows_, cols_ + b.cols_);
    m.add_block(0, 0, *this);
    m.add_block(0, cols_, b);
    return m;
  }

  Matrix vstack(const Matrix& b) const {
    if (cols_ != b.cols_) throw std::invalid_argument("Matrix::vstack: column mismatch");
    Matrix m(rows_ + b.rows_, cols_);
    m.add_block(0, 0, *this);
    m.add_block(rows_, 0, b);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

template <class K>
Vector<K> operator+(Vector<K> a, const Vector<K>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class K>
bool is_zero_vector(const Vector<K>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class K>
Vector<K> unit_vector(std::size_t n, std::size_t i, const K& one) {
  Vector<K> v(n);
  v.at(i) = one;
  return v;
}

}  // namespace lrc
