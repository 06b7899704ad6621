#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "stovar/core.hpp"
#include "stovar/matrix.hpp"

namespace stovar {

inline constexpr unsigned kDefaultPMax = 64;
inline constexpr unsigned kDefaultKReport = 200;

template <Scalar T>
struct ContractionPower {
  unsigned power = 0;
  T variation;
};

// Smallest p <= p_max with var(M^p) < 1 (floats: < 1 - tol). Throws
// NotSquare, or NotType1 when M is not of type 1.
template <Scalar T>
std::optional<ContractionPower<T>> find_contraction_power(const Matrix<T>& m, unsigned p_max,
                                                          Tolerance tol = {});

// The unique E with M E = E and vsum E = 1. The rows of M - I are
// dependent, so one row is swapped for the all-ones row (last row first,
// then each other row) before solving. Throws NonUniqueFixedVector when
// every such system is singular or the solution does not check out.
template <Scalar T>
Vector<T> stationary_vector(const Matrix<T>& m, Tolerance tol = {});

// P = E J. Throws VsumNotOne.
template <Scalar T>
Matrix<T> limit_projection(const Vector<T>& e, Tolerance tol = {});

// (var M)^r (var M^p)^q with k = p q + r, 0 <= r < p. Upper bound on
// var(M^k) for a type-1 M.
template <Scalar T>
T decay_bound(const T& var_m, const T& var_mp, unsigned p, unsigned k);

template <Scalar T>
struct IterateError {
  T actual;  // |M^k X - E|
  T bound;   // var(M^k) |X - E|
};

template <Scalar T>
IterateError<T> iterate_error_bound(const Matrix<T>& m, unsigned k, const Vector<T>& x, const Vector<T>& e,
                                    Tolerance tol = {});

enum class Verdict { ConvergesTo, NoContractionFoundUpTo };

struct AnalysisOptions {
  unsigned p_max = kDefaultPMax;
  unsigned k_report = kDefaultKReport;
  Tolerance tol{};
};

template <Scalar T>
struct DecayRow {
  unsigned k = 0;
  T bound;   // decay_bound at k
  T actual;  // var(M^k)
};

template <Scalar T>
struct ConvergenceAnalysis {
  TypeReport<T> type;
  VariationReport<T> variation_of_m;
  std::optional<unsigned> contraction_power;
  std::optional<T> variation_at_p;
  std::vector<T> variation_per_power;  // var(M^k) for k = 1..p, or 1..p_max
  std::optional<Vector<T>> stationary;
  std::optional<Matrix<T>> projection;
  std::vector<DecayRow<T>> decay_table;  // k = 1, 2, 4, ..., and k_report
  Verdict verdict = Verdict::NoContractionFoundUpTo;
  unsigned p_max = 0;
};

// Bundles the search, E, P and the decay table. A missing contraction
// power is inconclusive at p_max; divergence is never claimed here.
template <Scalar T>
ConvergenceAnalysis<T> analyze(const Matrix<T>& m, const AnalysisOptions& options = {});

// Returns the type c of a square M after certifying that M - cI is
// singular. Throws NotTyped; a failed certificate is a logic_error.
template <Scalar T>
T type_eigenvalue_certificate(const Matrix<T>& m, Tolerance tol = {});

// Complete classification of [[1-a, b], [a, 1-b]].
enum class Case2x2 { ConvergesGeneric, DivergesGeneric, DivergesLinear, Identity };

const char* to_string(Case2x2 c);

template <Scalar T>
struct Classification2x2 {
  Case2x2 kind = Case2x2::Identity;
  T c;
  std::pair<T, T> eigenvalues;  // (1, 1 - c)
  // (b, a) for eigenvalue 1 and (1, -1) for 1 - c; present when c != 0.
  std::optional<std::pair<Vector<T>, Vector<T>>> eigenvectors;
  T variation;  // |1 - c|
  std::optional<Vector<T>> stationary;  // (b/c, a/c), ConvergesGeneric only
};

template <Scalar T>
Matrix<T> matrix_2x2(const T& a, const T& b);

template <Scalar T>
Classification2x2<T> classify_2x2(const T& a, const T& b);

}  // namespace stovar
