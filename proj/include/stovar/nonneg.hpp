#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stovar/matrix.hpp"

namespace stovar {

enum class Sign : unsigned char { Zero, Plus };

// Zero/positive abstraction of a non-negative matrix.
class SignPattern {
 public:
  SignPattern(std::size_t rows, std::size_t cols, std::vector<Sign> entries);

  // Rows of "0" and "+" characters, e.g. {"0+0", "00+", "++0"}.
  static SignPattern parse(const std::vector<std::string>& rows);
  static SignPattern identity(std::size_t n);
  static SignPattern filled(std::size_t rows, std::size_t cols, Sign s);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  Sign operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  bool plus(std::size_t i, std::size_t j) const { return (*this)(i, j) == Sign::Plus; }
  bool all_plus() const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Sign> entries_;
};

// Throws NegativeEntry. In floats an entry is Plus when it exceeds the
// tolerance and negative when it is below -tolerance.
template <Scalar T>
SignPattern sign_pattern(const Matrix<T>& a, Tolerance tol = {});

SignPattern pattern_product(const SignPattern& p, const SignPattern& q);

// P^k for k >= 1.
SignPattern pattern_power(const SignPattern& p, unsigned k);

// Smallest k <= k_max with P^k entrywise Plus.
std::optional<unsigned> first_positive_power(const SignPattern& p, unsigned k_max);

// True iff every pair of columns (k, l), k == l included, shares a row
// where both are Plus.
bool pairwise_positive_overlap(const SignPattern& p);

// var A < a for a non-negative A of type a > 0, decided from the sign
// pattern and cross-checked against the direct variation. A disagreement
// is a logic_error. Throws NotTyped, NonPositiveType, NegativeEntry.
template <Scalar T>
bool strict_variation_test(const Matrix<T>& a, Tolerance tol = {});

// var A <= a for a non-negative A of type a.
template <Scalar T>
bool variation_type_bound_check(const Matrix<T>& a, Tolerance tol = {});

// var(M^3) < 1 for a 3x3 Markov matrix; equivalent to M^k converging to a
// rank-one projection. Throws for non-Markov or non-3x3 input.
template <Scalar T>
bool criterion_3x3(const Matrix<T>& m, Tolerance tol = {});

}  // namespace stovar
