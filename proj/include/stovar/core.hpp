#pragma once

#include <cstddef>
#include <optional>

#include "stovar/matrix.hpp"
#include "stovar/scalar.hpp"

namespace stovar {

template <Scalar T>
T vsum(const Vector<T>& x);

// l1 norm.
template <Scalar T>
T l1_norm(const Vector<T>& x);

// Half the largest l1 distance between two columns, with the achieving
// pair. Column indices are zero-based; arg_j < arg_k and the pair is the
// lexicographically smallest maximizer. A single-column matrix reports
// value 0 with pair (0, 0).
template <Scalar T>
struct VariationReport {
  T value;
  std::size_t arg_j = 0;
  std::size_t arg_k = 0;
};

template <Scalar T>
VariationReport<T> variation(const Matrix<T>& a);

// (max Z - min Z) / 2, the variation of Z read as a 1 x m matrix.
template <Scalar T>
T row_variation(const RowVector<T>& z);

// Column-sum report. type_value is the first column's sum; max_deviation
// is the largest |column sum - type_value|.
template <Scalar T>
struct TypeReport {
  bool has_type = false;
  T type_value;
  T max_deviation;
};

template <Scalar T>
TypeReport<T> type_of(const Matrix<T>& a, Tolerance tol = {});

template <Scalar T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b);

template <Scalar T>
Vector<T> mat_mul(const Matrix<T>& a, const Vector<T>& x);

template <Scalar T>
RowVector<T> mat_mul(const RowVector<T>& z, const Matrix<T>& a);

// M^k by binary powering; M^0 = I.
template <Scalar T>
Matrix<T> mat_pow(const Matrix<T>& m, unsigned k);

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return mat_mul(a, b);
}

template <Scalar T>
Vector<T> operator*(const Matrix<T>& a, const Vector<T>& x) {
  return mat_mul(a, x);
}

template <Scalar T>
RowVector<T> operator*(const RowVector<T>& z, const Matrix<T>& a) {
  return mat_mul(z, a);
}

// Gaussian elimination helpers. Rationals pivot on the first nonzero
// entry; doubles use partial pivoting and treat a pivot below
// tol * max|entry| as zero.
template <Scalar T>
std::size_t rank(const Matrix<T>& a, Tolerance tol = {});

template <Scalar T>
T determinant(const Matrix<T>& a);

// Solves a x = b for square a; empty when a is (numerically) singular.
template <Scalar T>
std::optional<Vector<T>> solve(const Matrix<T>& a, const Vector<T>& b, Tolerance tol = {});

}  // namespace stovar
