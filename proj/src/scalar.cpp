#include "stovar/scalar.hpp"

#include <cctype>
#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "stovar/error.hpp"

namespace stovar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotTyped: return "NotTyped";
    case ErrorCode::NotType1: return "NotType1";
    case ErrorCode::NonUniqueFixedVector: return "NonUniqueFixedVector";
    case ErrorCode::VsumNotOne: return "VsumNotOne";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonPositiveType: return "NonPositiveType";
    case ErrorCode::ZeroVariation: return "ZeroVariation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string format_scalar(const Rational& x) { return x.str(); }

std::string format_scalar(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

namespace {

using boost::multiprecision::mpz_int;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    if (!exp_part.empty() && exp_part.front() == '+') exp_part.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
    if (exp_part.empty() || ec != std::errc() || ptr != exp_part.data() + exp_part.size()) bad_number(text);
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_number(text);
  if (!all_digits(int_part) || !all_digits(frac_part)) bad_number(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  // A leading zero would make GMP read the digits as octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  mpz_int mantissa(digits.empty() ? std::string("0") : digits);
  exponent -= static_cast<long>(frac_part.size());

  Rational value(mantissa);
  if (exponent > 0) {
    value *= Rational(boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(exponent)));
  } else if (exponent < 0) {
    value /= Rational(boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(-exponent)));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

bool looks_like_fraction(std::string_view text) { return text.find('/') != std::string_view::npos; }

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);

  Rational num = parse_decimal(trim(s.substr(0, slash)));
  Rational den = parse_decimal(trim(s.substr(slash + 1)));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return num / den;
}

double parse_double(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) bad_number(text);
  return value;
}

}  // namespace stovar
