#include "stovar/nonneg.hpp"

#include <algorithm>
#include <stdexcept>

#include "stovar/core.hpp"

namespace stovar {

SignPattern::SignPattern(std::size_t rows, std::size_t cols, std::vector<Sign> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::EmptyMatrix, "pattern with a zero dimension");
  if (entries_.size() != rows_ * cols_)
    throw Error(ErrorCode::DimensionMismatch, "entry count does not equal rows * cols");
}

SignPattern SignPattern::parse(const std::vector<std::string>& rows) {
  if (rows.empty()) throw Error(ErrorCode::EmptyMatrix, "empty pattern");
  const std::size_t cols = rows.front().size();
  std::vector<Sign> entries;
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(ErrorCode::ParseError, "ragged pattern rows");
    for (char ch : row) {
      if (ch == '0') {
        entries.push_back(Sign::Zero);
      } else if (ch == '+') {
        entries.push_back(Sign::Plus);
      } else {
        throw Error(ErrorCode::ParseError, std::string("pattern entry '") + ch + "' is not 0 or +");
      }
    }
  }
  return SignPattern(rows.size(), cols, std::move(entries));
}

SignPattern SignPattern::filled(std::size_t rows, std::size_t cols, Sign s) {
  return SignPattern(rows, cols, std::vector<Sign>(rows * cols, s));
}

SignPattern SignPattern::identity(std::size_t n) {
  std::vector<Sign> entries(n * n, Sign::Zero);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Sign::Plus;
  return SignPattern(n, n, std::move(entries));
}

bool SignPattern::all_plus() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Sign s) { return s == Sign::Plus; });
}

std::vector<std::string> SignPattern::to_strings() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::string row;
    for (std::size_t j = 0; j < cols_; ++j) row += plus(i, j) ? '+' : '0';
    out.push_back(std::move(row));
  }
  return out;
}

template <Scalar T>
SignPattern sign_pattern(const Matrix<T>& a, Tolerance tol) {
  std::vector<Sign> entries;
  entries.reserve(a.data().size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& x = a(i, j);
      bool negative = false;
      bool positive = false;
      if constexpr (is_exact_v<T>) {
        negative = x < 0;
        positive = x > 0;
      } else {
        negative = x < -tol.value;
        positive = x > tol.value;
      }
      if (negative)
        throw Error(ErrorCode::NegativeEntry, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                                  ") is " + format_scalar(x));
      entries.push_back(positive ? Sign::Plus : Sign::Zero);
    }
  }
  return SignPattern(a.rows(), a.cols(), std::move(entries));
}

SignPattern pattern_product(const SignPattern& p, const SignPattern& q) {
  if (p.cols() != q.rows()) throw Error(ErrorCode::DimensionMismatch, "pattern product");
  std::vector<Sign> entries(p.rows() * q.cols(), Sign::Zero);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t k = 0; k < q.cols(); ++k)
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (p.plus(i, j) && q.plus(j, k)) {
          entries[i * q.cols() + k] = Sign::Plus;
          break;
        }
  return SignPattern(p.rows(), q.cols(), std::move(entries));
}

SignPattern pattern_power(const SignPattern& p, unsigned k) {
  if (!p.is_square()) throw Error(ErrorCode::NotSquare, "power of a non-square pattern");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "pattern power needs k >= 1");
  SignPattern out = p;
  for (unsigned i = 1; i < k; ++i) out = pattern_product(out, p);
  return out;
}

std::optional<unsigned> first_positive_power(const SignPattern& p, unsigned k_max) {
  if (!p.is_square()) throw Error(ErrorCode::NotSquare, "regularity index of a non-square pattern");
  SignPattern power = p;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (k > 1) power = pattern_product(power, p);
    if (power.all_plus()) return k;
  }
  return std::nullopt;
}

bool pairwise_positive_overlap(const SignPattern& p) {
  for (std::size_t k = 0; k < p.cols(); ++k) {
    for (std::size_t l = k; l < p.cols(); ++l) {
      bool shared = false;
      for (std::size_t j = 0; j < p.rows() && !shared; ++j) shared = p.plus(j, k) && p.plus(j, l);
      if (!shared) return false;
    }
  }
  return true;
}

namespace {

template <Scalar T>
T nonneg_type(const Matrix<T>& a, Tolerance tol) {
  auto type = type_of(a, tol);
  if (!type.has_type) throw Error(ErrorCode::NotTyped, "column sums differ");
  sign_pattern(a, tol);  // rejects negative entries
  return type.type_value;
}

}  // namespace

template <Scalar T>
bool strict_variation_test(const Matrix<T>& a, Tolerance tol) {
  const T type = nonneg_type(a, tol);
  if (!(type > 0)) throw Error(ErrorCode::NonPositiveType, "type " + format_scalar(type) + " is not positive");

  const bool by_pattern = pairwise_positive_overlap(sign_pattern(a, tol));
  const T var = variation(a).value;

  bool agrees = false;
  if constexpr (is_exact_v<T>) {
    agrees = by_pattern == (var < type);
  } else {
    // Entries within the tolerance of zero count as Zero, so a pattern
    // without overlap may still leave var up to rows * tol below a.
    const double slack = tol.value * static_cast<double>(a.rows()) * std::fmax(1.0, type);
    agrees = by_pattern ? var < type : var >= type - slack;
  }
  if (!agrees)
    throw std::logic_error("pattern test and direct variation disagree: var = " + format_scalar(var) +
                           ", type = " + format_scalar(type));
  return by_pattern;
}

template <Scalar T>
bool variation_type_bound_check(const Matrix<T>& a, Tolerance tol) {
  const T type = nonneg_type(a, tol);
  return approx_less_equal(variation(a).value, type, tol);
}

template <Scalar T>
bool criterion_3x3(const Matrix<T>& m, Tolerance tol) {
  if (m.rows() != 3 || m.cols() != 3) throw Error(ErrorCode::InvalidArgument, "criterion needs a 3x3 matrix");
  const T type = nonneg_type(m, tol);
  if (!approx_equal(type, T(1), tol)) throw Error(ErrorCode::NotType1, "not a Markov matrix");
  return definitely_less(variation(mat_pow(m, 3)).value, T(1), tol);
}

#define STOVAR_INSTANTIATE_NONNEG(T)                                   \
  template SignPattern sign_pattern(const Matrix<T>&, Tolerance);      \
  template bool strict_variation_test(const Matrix<T>&, Tolerance);    \
  template bool variation_type_bound_check(const Matrix<T>&, Tolerance); \
  template bool criterion_3x3(const Matrix<T>&, Tolerance);

STOVAR_INSTANTIATE_NONNEG(Rational)
STOVAR_INSTANTIATE_NONNEG(double)

#undef STOVAR_INSTANTIATE_NONNEG

}  // namespace stovar
