#include "stovar/analysis.hpp"

#include <stdexcept>
#include <string>

namespace stovar {

namespace {

template <Scalar T>
T ipow(T base, unsigned e) {
  T result(1);
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

template <Scalar T>
void require_type1(const Matrix<T>& m, Tolerance tol) {
  if (!m.is_square())
    throw Error(ErrorCode::NotSquare,
                "expected a square matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  auto type = type_of(m, tol);
  if (!type.has_type) throw Error(ErrorCode::NotType1, "column sums differ");
  if (!approx_equal(type.type_value, T(1), tol))
    throw Error(ErrorCode::NotType1, "column sums equal " + format_scalar(type.type_value) + ", not 1");
}

template <Scalar T>
void require_vsum_one(const Vector<T>& v, Tolerance tol, const char* what) {
  T s = vsum(v);
  if (!approx_equal(s, T(1), tol))
    throw Error(ErrorCode::VsumNotOne, std::string(what) + " has entry sum " + format_scalar(s));
}

template <Scalar T>
struct PowerScan {
  std::vector<T> variations;
  std::optional<unsigned> power;
};

template <Scalar T>
PowerScan<T> scan_powers(const Matrix<T>& m, unsigned p_max, Tolerance tol) {
  require_type1(m, tol);
  PowerScan<T> scan;
  Matrix<T> power = m;
  for (unsigned p = 1; p <= p_max; ++p) {
    if (p > 1) power = mat_mul(power, m);
    scan.variations.push_back(variation(power).value);
    if (definitely_less(scan.variations.back(), T(1), tol)) {
      scan.power = p;
      break;
    }
  }
  return scan;
}

template <Scalar T>
bool is_fixed_vector(const Matrix<T>& m, const Vector<T>& e, Tolerance tol) {
  if constexpr (is_exact_v<T>) {
    return mat_mul(m, e) == e && vsum(e) == 1;
  } else {
    double scale = std::fmax(1.0, l1_norm(e)) * static_cast<double>(e.size());
    return l1_norm(mat_mul(m, e) - e) <= tol.value * scale && approx_equal(vsum(e), 1.0, tol);
  }
}

}  // namespace

template <Scalar T>
std::optional<ContractionPower<T>> find_contraction_power(const Matrix<T>& m, unsigned p_max, Tolerance tol) {
  auto scan = scan_powers(m, p_max, tol);
  if (!scan.power) return std::nullopt;
  return ContractionPower<T>{*scan.power, scan.variations.back()};
}

template <Scalar T>
Vector<T> stationary_vector(const Matrix<T>& m, Tolerance tol) {
  require_type1(m, tol);
  const std::size_t n = m.rows();
  const Matrix<T> shifted = m - Matrix<T>::identity(n);

  std::vector<std::size_t> order{n - 1};
  for (std::size_t r = 0; r + 1 < n; ++r) order.push_back(r);

  for (std::size_t replaced : order) {
    Matrix<T> system = shifted;
    for (std::size_t j = 0; j < n; ++j) system(replaced, j) = T(1);
    auto e = solve(system, Vector<T>::unit(n, replaced), tol);
    if (e && is_fixed_vector(m, *e, tol)) return *e;
  }
  throw Error(ErrorCode::NonUniqueFixedVector, "no unique fixed vector with entry sum 1");
}

template <Scalar T>
Matrix<T> limit_projection(const Vector<T>& e, Tolerance tol) {
  require_vsum_one(e, tol, "stationary vector");
  const std::size_t n = e.size();
  Matrix<T> p = Matrix<T>::zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = e[i];
  return p;
}

template <Scalar T>
T decay_bound(const T& var_m, const T& var_mp, unsigned p, unsigned k) {
  if (p == 0 || k == 0) throw Error(ErrorCode::InvalidArgument, "decay bound needs p >= 1 and k >= 1");
  if (!(var_mp < 1)) throw Error(ErrorCode::InvalidArgument, "var(M^p) must be below 1");
  if (var_m < 0 || var_mp < 0) throw Error(ErrorCode::InvalidArgument, "variations are non-negative");
  const unsigned q = k / p;
  const unsigned r = k % p;
  return ipow(var_m, r) * ipow(var_mp, q);
}

template <Scalar T>
IterateError<T> iterate_error_bound(const Matrix<T>& m, unsigned k, const Vector<T>& x, const Vector<T>& e,
                                    Tolerance tol) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  require_type1(m, tol);
  if (x.size() != m.cols() || e.size() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match the matrix");
  require_vsum_one(x, tol, "X");
  require_vsum_one(e, tol, "E");

  const Matrix<T> mk = mat_pow(m, k);
  T actual = l1_norm(mat_mul(mk, x) - e);
  T bound = variation(mk).value * l1_norm(x - e);
  return {actual, bound};
}

template <Scalar T>
ConvergenceAnalysis<T> analyze(const Matrix<T>& m, const AnalysisOptions& options) {
  if (!m.is_square())
    throw Error(ErrorCode::NotSquare,
                "expected a square matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (options.p_max == 0 || options.k_report == 0)
    throw Error(ErrorCode::InvalidArgument, "p_max and k_report must be positive");

  ConvergenceAnalysis<T> out;
  out.p_max = options.p_max;
  out.type = type_of(m, options.tol);
  out.variation_of_m = variation(m);

  auto scan = scan_powers(m, options.p_max, options.tol);
  out.variation_per_power = scan.variations;
  if (!scan.power) return out;

  const unsigned p = *scan.power;
  out.contraction_power = p;
  out.variation_at_p = scan.variations.back();
  out.stationary = stationary_vector(m, options.tol);
  out.projection = limit_projection(*out.stationary, options.tol);
  out.verdict = Verdict::ConvergesTo;

  const T& var_m = out.variation_of_m.value;
  Matrix<T> power = m;
  unsigned k = 1;
  for (; k < options.k_report; k *= 2) {
    out.decay_table.push_back({k, decay_bound(var_m, *out.variation_at_p, p, k), variation(power).value});
    if (k > options.k_report / 2) break;
    power = mat_mul(power, power);
  }
  out.decay_table.push_back({options.k_report, decay_bound(var_m, *out.variation_at_p, p, options.k_report),
                             variation(mat_pow(m, options.k_report)).value});
  return out;
}

template <Scalar T>
T type_eigenvalue_certificate(const Matrix<T>& m, Tolerance tol) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "certificate needs a square matrix");
  auto type = type_of(m, tol);
  if (!type.has_type) throw Error(ErrorCode::NotTyped, "column sums differ");
  const T c = type.type_value;
  const Matrix<T> shifted = m - c * Matrix<T>::identity(m.rows());
  if (rank(shifted, tol) >= m.rows())
    throw std::logic_error("M - cI is nonsingular for the type c = " + format_scalar(c));
  return c;
}

const char* to_string(Case2x2 c) {
  switch (c) {
    case Case2x2::ConvergesGeneric: return "ConvergesGeneric";
    case Case2x2::DivergesGeneric: return "DivergesGeneric";
    case Case2x2::DivergesLinear: return "DivergesLinear";
    case Case2x2::Identity: return "Identity";
  }
  return "Unknown";
}

template <Scalar T>
Matrix<T> matrix_2x2(const T& a, const T& b) {
  return Matrix<T>(2, 2, {T(1 - a), b, a, T(1 - b)});
}

template <Scalar T>
Classification2x2<T> classify_2x2(const T& a, const T& b) {
  Classification2x2<T> out;
  out.c = a + b;
  out.eigenvalues = {T(1), T(1 - out.c)};
  out.variation = abs_value(T(1 - out.c));

  if (out.c != 0) {
    out.eigenvectors = std::make_pair(Vector<T>{b, a}, Vector<T>{T(1), T(-1)});
    if (out.c > 0 && out.c < 2) {
      out.kind = Case2x2::ConvergesGeneric;
      out.stationary = Vector<T>{T(b / out.c), T(a / out.c)};
    } else {
      out.kind = Case2x2::DivergesGeneric;
    }
  } else {
    out.kind = a != 0 ? Case2x2::DivergesLinear : Case2x2::Identity;
  }
  return out;
}

#define STOVAR_INSTANTIATE_ANALYSIS(T)                                                                    \
  template std::optional<ContractionPower<T>> find_contraction_power(const Matrix<T>&, unsigned, Tolerance); \
  template Vector<T> stationary_vector(const Matrix<T>&, Tolerance);                                      \
  template Matrix<T> limit_projection(const Vector<T>&, Tolerance);                                       \
  template T decay_bound(const T&, const T&, unsigned, unsigned);                                         \
  template IterateError<T> iterate_error_bound(const Matrix<T>&, unsigned, const Vector<T>&,              \
                                               const Vector<T>&, Tolerance);                              \
  template ConvergenceAnalysis<T> analyze(const Matrix<T>&, const AnalysisOptions&);                      \
  template T type_eigenvalue_certificate(const Matrix<T>&, Tolerance);                                    \
  template Matrix<T> matrix_2x2(const T&, const T&);                                                      \
  template Classification2x2<T> classify_2x2(const T&, const T&);

STOVAR_INSTANTIATE_ANALYSIS(Rational)
STOVAR_INSTANTIATE_ANALYSIS(double)

#undef STOVAR_INSTANTIATE_ANALYSIS

}  // namespace stovar
