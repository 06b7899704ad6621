#include "stovar/norms.hpp"

#include "stovar/core.hpp"

namespace stovar {

template <Scalar T>
Vector<T> variation_maximizer(const Matrix<T>& a) {
  if (a.cols() < 2) throw Error(ErrorCode::InvalidArgument, "maximizer needs at least two columns");
  const auto report = variation(a);
  std::vector<T> x(a.cols(), T(0));
  x[report.arg_j] = T(1) / T(2);
  x[report.arg_k] = T(-1) / T(2);
  return Vector<T>(std::move(x));
}

template <Scalar T>
RowVector<T> row_variation_maximizer(const Matrix<T>& b, Tolerance tol) {
  if (b.rows() < 2) throw Error(ErrorCode::InvalidArgument, "row maximizer needs at least two rows");
  if (!type_of(b, tol).has_type) throw Error(ErrorCode::NotTyped, "column sums differ");
  const auto report = variation(b);
  if (is_zero(report.value, Tolerance{0.0}))
    throw Error(ErrorCode::ZeroVariation, "all columns are equal; every Z attains the maximum 0");

  std::vector<T> z;
  z.reserve(b.rows());
  for (std::size_t j = 0; j < b.rows(); ++j) z.push_back(b(j, report.arg_j) > b(j, report.arg_k) ? T(1) : T(-1));
  return RowVector<T>(std::move(z));
}

template Vector<Rational> variation_maximizer(const Matrix<Rational>&);
template Vector<double> variation_maximizer(const Matrix<double>&);
template RowVector<Rational> row_variation_maximizer(const Matrix<Rational>&, Tolerance);
template RowVector<double> row_variation_maximizer(const Matrix<double>&, Tolerance);

}  // namespace stovar
