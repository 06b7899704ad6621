#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "stovar/error.hpp"
#include "stovar/scalar.hpp"

namespace stovar {

// Column vector of fixed length n >= 1.
template <Scalar T>
class Vector {
 public:
  explicit Vector(std::vector<T> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorCode::EmptyMatrix, "vector of length 0");
  }
  Vector(std::initializer_list<T> entries) : Vector(std::vector<T>(entries)) {}

  static Vector zeros(std::size_t n) { return Vector(std::vector<T>(n, T(0))); }
  static Vector unit(std::size_t n, std::size_t i) {
    Vector v = zeros(n);
    v.entries_.at(i) = T(1);
    return v;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const T& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const T> entries() const noexcept { return entries_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<T> entries_;
};

// Row vector of fixed length m >= 1.
template <Scalar T>
class RowVector {
 public:
  explicit RowVector(std::vector<T> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorCode::EmptyMatrix, "row vector of length 0");
  }
  RowVector(std::initializer_list<T> entries) : RowVector(std::vector<T>(entries)) {}

  static RowVector ones(std::size_t m) { return RowVector(std::vector<T>(m, T(1))); }

  std::size_t size() const noexcept { return entries_.size(); }
  const T& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const T> entries() const noexcept { return entries_; }

  friend bool operator==(const RowVector&, const RowVector&) = default;

 private:
  std::vector<T> entries_;
};

// Dense row-major m x n matrix, m, n >= 1.
template <Scalar T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::EmptyMatrix, "matrix with a zero dimension");
    if (data_.size() != rows_ * cols_)
      throw Error(ErrorCode::DimensionMismatch, "entry count does not equal rows * cols");
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()), cols_(0) {
    if (rows_ != 0) cols_ = rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::EmptyMatrix, "matrix with a zero dimension");
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix filled(std::size_t rows, std::size_t cols, const T& value) {
    return Matrix(rows, cols, std::vector<T>(rows * cols, value));
  }
  static Matrix zeros(std::size_t rows, std::size_t cols) { return filled(rows, cols, T(0)); }
  static Matrix identity(std::size_t n) {
    Matrix m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_column(const Vector<T>& v) {
    return Matrix(v.size(), 1, std::vector<T>(v.entries().begin(), v.entries().end()));
  }
  static Matrix from_row(const RowVector<T>& z) {
    return Matrix(1, z.size(), std::vector<T>(z.entries().begin(), z.entries().end()));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const T> data() const noexcept { return data_; }

  Vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return Vector<T>(std::move(out));
  }

  RowVector<T> row(std::size_t i) const {
    return RowVector<T>(std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <Scalar T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix sum of different shapes");
  std::vector<T> out(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.data()[i];
  return Matrix<T>(a.rows(), a.cols(), std::move(out));
}

template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix difference of different shapes");
  std::vector<T> out(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.data()[i];
  return Matrix<T>(a.rows(), a.cols(), std::move(out));
}

template <Scalar T>
Matrix<T> operator*(const T& c, const Matrix<T>& a) {
  std::vector<T> out(a.data().begin(), a.data().end());
  for (auto& x : out) x *= c;
  return Matrix<T>(a.rows(), a.cols(), std::move(out));
}

template <Scalar T>
Vector<T> operator-(const Vector<T>& x, const Vector<T>& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference of different lengths");
  std::vector<T> out(x.entries().begin(), x.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
  return Vector<T>(std::move(out));
}

template <Scalar T>
Vector<T> operator*(const T& c, const Vector<T>& x) {
  std::vector<T> out(x.entries().begin(), x.entries().end());
  for (auto& v : out) v *= c;
  return Vector<T>(std::move(out));
}

}  // namespace stovar
