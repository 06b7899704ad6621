#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace stovar {

// Exact rational in lowest terms with positive denominator (GMP mpq).
using Rational = boost::multiprecision::mpq_rational;

// The two scalar domains. A matrix lives in exactly one of them; mixing
// them in one operation does not compile.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

inline constexpr double kDefaultTolerance = 1e-9;

// Relative tolerance used by the floating-point domain. Ignored by the
// rational domain, where every comparison is exact.
struct Tolerance {
  double value = kDefaultTolerance;
};

template <Scalar T>
T abs_value(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x < 0 ? T(-x) : x;
  } else {
    return std::fabs(x);
  }
}

template <Scalar T>
double to_double(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x.template convert_to<double>();
  } else {
    return x;
  }
}

namespace detail {
inline double scale_of(double a, double b) {
  return std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
}
}  // namespace detail

template <Scalar T>
bool approx_equal(const T& a, const T& b, Tolerance tol = {}) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return std::fabs(a - b) <= tol.value * detail::scale_of(a, b);
  }
}

// a < b with a guard band in floats: a must clear b by the tolerance.
template <Scalar T>
bool definitely_less(const T& a, const T& b, Tolerance tol = {}) {
  if constexpr (is_exact_v<T>) {
    return a < b;
  } else {
    return a < b - tol.value * detail::scale_of(a, b);
  }
}

template <Scalar T>
bool approx_less_equal(const T& a, const T& b, Tolerance tol = {}) {
  return !definitely_less(b, a, tol);
}

template <Scalar T>
bool is_zero(const T& x, Tolerance tol = {}) {
  if constexpr (is_exact_v<T>) {
    return x == 0;
  } else {
    return std::fabs(x) <= tol.value;
  }
}

// "p/q" (or "p" for integers) for rationals, 17 significant digits for
// doubles.
std::string format_scalar(const Rational& x);
std::string format_scalar(double x);

// Accepts "p/q", an integer, or a decimal literal with optional exponent
// ("-1.25e-3"). Decimal literals are converted digit by digit, never
// through binary floating point.
Rational parse_rational(std::string_view text);

double parse_double(std::string_view text);

bool looks_like_fraction(std::string_view text);

}  // namespace stovar
