#pragma once

// Test-only fixtures, random generators and brute-force oracles. The
// oracles here deliberately avoid the library's own routines.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "stovar/matrix.hpp"
#include "stovar/scalar.hpp"

namespace stovar::testing {

inline Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }

// The 3x3 type-1 matrix with eigenvalues 1, 2/5, 1/5.
inline Matrix<Rational> example1() {
  return {{q(0), q(2, 5), q(-4, 5)}, {q(-1, 5), q(-1, 5), q(0)}, {q(6, 5), q(4, 5), q(9, 5)}};
}

inline Matrix<Rational> example1_squared() {
  return {{q(-26, 25), q(-18, 25), q(-36, 25)}, {q(1, 25), q(-1, 25), q(4, 25)}, {q(50, 25), q(44, 25), q(57, 25)}};
}

inline Matrix<Rational> example1_limit() {
  return {{q(-6, 3), q(-6, 3), q(-6, 3)}, {q(1, 3), q(1, 3), q(1, 3)}, {q(8, 3), q(8, 3), q(8, 3)}};
}

inline Vector<Rational> example1_stationary() { return {q(-2), q(1, 3), q(8, 3)}; }

// Instances of the three Markov sign patterns K, L, M.
inline Matrix<Rational> pattern_k_instance() {
  return {{q(1), q(1, 2), q(1, 3)}, {q(0), q(1, 2), q(1, 3)}, {q(0), q(0), q(1, 3)}};
}
inline Matrix<Rational> pattern_l_instance() {
  return {{q(1, 2), q(1, 2), q(0)}, {q(1, 2), q(0), q(1, 2)}, {q(0), q(1, 2), q(1, 2)}};
}
inline Matrix<Rational> pattern_m_instance() {
  return {{q(0), q(1, 2), q(0)}, {q(0), q(0), q(1)}, {q(1), q(1, 2), q(0)}};
}

template <Scalar T>
Matrix<T> to_domain(const Matrix<Rational>& m) {
  if constexpr (is_exact_v<T>) {
    return m;
  } else {
    std::vector<double> data;
    for (const auto& x : m.data()) data.push_back(x.convert_to<double>());
    return Matrix<double>(m.rows(), m.cols(), std::move(data));
  }
}

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long max_abs_num = 9, long max_den = 6) {
  return q(uniform_int(rng, -max_abs_num, max_abs_num), uniform_int(rng, 1, max_den));
}

inline Matrix<Rational> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<Rational> data;
  for (std::size_t i = 0; i < rows * cols; ++i) data.push_back(random_rational(rng));
  return Matrix<Rational>(rows, cols, std::move(data));
}

// Random entries, then the mean subtracted so the entries sum to 0.
inline Vector<Rational> random_sum_zero(Rng& rng, std::size_t n) {
  std::vector<Rational> x;
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(random_rational(rng));
    total += x.back();
  }
  for (auto& v : x) v -= total / Rational(static_cast<long>(n));
  return Vector<Rational>(std::move(x));
}

// Random matrix with every column summing to `type`: the last row absorbs
// the difference.
inline Matrix<Rational> random_typed(Rng& rng, std::size_t rows, std::size_t cols, const Rational& type) {
  Matrix<Rational> m = random_matrix(rng, rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Rational partial = 0;
    for (std::size_t i = 0; i + 1 < rows; ++i) partial += m(i, j);
    m(rows - 1, j) = type - partial;
  }
  return m;
}

// Non-negative matrix of positive type `type`, with a sprinkling of zeros.
inline Matrix<Rational> random_nonneg_typed(Rng& rng, std::size_t rows, std::size_t cols, const Rational& type,
                                            double zero_probability = 0.4) {
  std::bernoulli_distribution zero(zero_probability);
  Matrix<Rational> m = Matrix<Rational>::zeros(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Rational total = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      m(i, j) = zero(rng) ? q(0) : q(uniform_int(rng, 1, 9));
      total += m(i, j);
    }
    if (total == 0) {
      std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(rows) - 1));
      m(i, j) = 1;
      total = 1;
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = m(i, j) * type / total;
  }
  return m;
}

// 3x3 Markov matrix: random 0/+ pattern with nonempty columns, positive
// integer fills, columns normalized.
inline Matrix<Rational> random_markov_3x3(Rng& rng) { return random_nonneg_typed(rng, 3, 3, q(1), 0.5); }

// Independent oracle: half the largest l1 distance over all ordered pairs.
template <Scalar T>
T brute_variation(const Matrix<T>& a) {
  T best(0);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      T d(0);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        T diff = a(i, j) - a(i, k);
        d += diff < 0 ? T(-diff) : diff;
      }
      best = std::max(best, d);
    }
  return best / T(2);
}

template <Scalar T>
Matrix<T> naive_mul(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out = Matrix<T>::zeros(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) {
      T acc(0);
      for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, k);
      out(i, k) = acc;
    }
  return out;
}

template <Scalar T>
Matrix<T> naive_pow(const Matrix<T>& m, unsigned k) {
  Matrix<T> out = Matrix<T>::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = naive_mul(out, m);
  return out;
}

template <Scalar T>
std::vector<T> naive_apply(const Matrix<T>& m, const std::vector<T>& x) {
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * x[j];
  return out;
}

template <Scalar T>
T naive_l1(const std::vector<T>& x) {
  T s(0);
  for (const auto& v : x) s += v < 0 ? T(-v) : v;
  return s;
}

// Float power iteration x <- M x, the oracle for stationary vectors.
inline std::vector<double> power_iterate(const Matrix<double>& m, std::vector<double> x, int steps) {
  for (int s = 0; s < steps; ++s) x = naive_apply(m, x);
  return x;
}

}  // namespace stovar::testing
