#include "stovar/core.hpp"

#include <algorithm>
#include <utility>

namespace stovar {

template <Scalar T>
T vsum(const Vector<T>& x) {
  T total(0);
  for (const auto& v : x.entries()) total += v;
  return total;
}

template <Scalar T>
T l1_norm(const Vector<T>& x) {
  T total(0);
  for (const auto& v : x.entries()) total += abs_value(v);
  return total;
}

template <Scalar T>
VariationReport<T> variation(const Matrix<T>& a) {
  VariationReport<T> report{T(0), 0, 0};
  if (a.cols() == 1) return report;

  T best(-1);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t k = j + 1; k < a.cols(); ++k) {
      T dist(0);
      for (std::size_t i = 0; i < a.rows(); ++i) dist += abs_value(T(a(i, j) - a(i, k)));
      // Strict comparison keeps the lexicographically first maximizer.
      if (dist > best) {
        best = dist;
        report.arg_j = j;
        report.arg_k = k;
      }
    }
  }
  report.value = best / T(2);
  return report;
}

template <Scalar T>
T row_variation(const RowVector<T>& z) {
  auto [lo, hi] = std::minmax_element(z.entries().begin(), z.entries().end());
  return (*hi - *lo) / T(2);
}

template <Scalar T>
TypeReport<T> type_of(const Matrix<T>& a, Tolerance tol) {
  std::vector<T> sums(a.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sums[j] += a(i, j);

  TypeReport<T> report{true, sums.front(), T(0)};
  for (const auto& s : sums) {
    T dev = abs_value(T(s - report.type_value));
    if (dev > report.max_deviation) report.max_deviation = dev;
  }
  if constexpr (is_exact_v<T>) {
    report.has_type = report.max_deviation == 0;
  } else {
    report.has_type =
        report.max_deviation <= tol.value * std::fmax(1.0, std::fabs(report.type_value));
  }
  return report;
}

template <Scalar T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "product of " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " and " +
                                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix<T> out = Matrix<T>::zeros(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const T& ail = a(i, l);
      if (ail == 0) continue;
      for (std::size_t k = 0; k < b.cols(); ++k) out(i, k) += ail * b(l, k);
    }
  }
  return out;
}

template <Scalar T>
Vector<T> mat_mul(const Matrix<T>& a, const Vector<T>& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return Vector<T>(std::move(out));
}

template <Scalar T>
RowVector<T> mat_mul(const RowVector<T>& z, const Matrix<T>& a) {
  if (z.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "row-matrix product");
  std::vector<T> out(a.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += z[i] * a(i, j);
  return RowVector<T>(std::move(out));
}

template <Scalar T>
Matrix<T> mat_pow(const Matrix<T>& m, unsigned k) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "power of a non-square matrix");
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (k > 0) {
    if (k & 1U) result = mat_mul(result, base);
    k >>= 1U;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

namespace {

template <Scalar T>
T max_abs_entry(const Matrix<T>& a) {
  T best(0);
  for (const auto& v : a.data()) best = std::max(best, abs_value(v));
  return best;
}

// Picks the pivot row for column c among rows [r, rows). Returns rows()
// when the column has no usable pivot.
template <Scalar T>
std::size_t pick_pivot(const Matrix<T>& a, std::size_t r, std::size_t c, double threshold) {
  if constexpr (is_exact_v<T>) {
    for (std::size_t i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) return i;
    return a.rows();
  } else {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < a.rows(); ++i)
      if (std::fabs(a(i, c)) > std::fabs(a(best, c))) best = i;
    return std::fabs(a(best, c)) > threshold ? best : a.rows();
  }
}

template <Scalar T>
void swap_rows(Matrix<T>& a, std::size_t r, std::size_t s) {
  if (r == s) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(s, j));
}

// In-place forward elimination. Returns pivot columns in row order and the
// number of row swaps performed.
template <Scalar T>
std::pair<std::vector<std::size_t>, std::size_t> forward_eliminate(Matrix<T>& a, std::size_t ncols,
                                                                   Tolerance tol) {
  double threshold = 0.0;
  if constexpr (!is_exact_v<T>) threshold = tol.value * max_abs_entry(a);

  std::vector<std::size_t> pivots;
  std::size_t swaps = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t p = pick_pivot(a, r, c, threshold);
    if (p == a.rows()) continue;
    if (p != r) ++swaps;
    swap_rows(a, r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      T factor = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {pivots, swaps};
}

}  // namespace

template <Scalar T>
std::size_t rank(const Matrix<T>& a, Tolerance tol) {
  Matrix<T> work = a;
  return forward_eliminate(work, work.cols(), tol).first.size();
}

template <Scalar T>
T determinant(const Matrix<T>& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  Matrix<T> work = a;
  auto [pivots, swaps] = forward_eliminate(work, work.cols(), Tolerance{0.0});
  if (pivots.size() < a.rows()) return T(0);
  T det(swaps % 2 == 0 ? 1 : -1);
  for (std::size_t i = 0; i < a.rows(); ++i) det *= work(i, i);
  return det;
}

template <Scalar T>
std::optional<Vector<T>> solve(const Matrix<T>& a, const Vector<T>& b, Tolerance tol) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "solve with a non-square matrix");
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  const std::size_t n = a.rows();

  Matrix<T> aug = Matrix<T>::zeros(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = forward_eliminate(aug, n, tol).first;
  if (pivots.size() < n) return std::nullopt;

  std::vector<T> x(n, T(0));
  for (std::size_t i = n; i-- > 0;) {
    T acc = aug(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= aug(i, j) * x[j];
    x[i] = acc / aug(i, i);
  }
  return Vector<T>(std::move(x));
}

#define STOVAR_INSTANTIATE_CORE(T)                                                   \
  template T vsum(const Vector<T>&);                                                 \
  template T l1_norm(const Vector<T>&);                                              \
  template VariationReport<T> variation(const Matrix<T>&);                           \
  template T row_variation(const RowVector<T>&);                                     \
  template TypeReport<T> type_of(const Matrix<T>&, Tolerance);                       \
  template Matrix<T> mat_mul(const Matrix<T>&, const Matrix<T>&);                    \
  template Vector<T> mat_mul(const Matrix<T>&, const Vector<T>&);                     \
  template RowVector<T> mat_mul(const RowVector<T>&, const Matrix<T>&);              \
  template Matrix<T> mat_pow(const Matrix<T>&, unsigned);                            \
  template std::size_t rank(const Matrix<T>&, Tolerance);                            \
  template T determinant(const Matrix<T>&);                                          \
  template std::optional<Vector<T>> solve(const Matrix<T>&, const Vector<T>&, Tolerance);

STOVAR_INSTANTIATE_CORE(Rational)
STOVAR_INSTANTIATE_CORE(double)

#undef STOVAR_INSTANTIATE_CORE

}  // namespace stovar
