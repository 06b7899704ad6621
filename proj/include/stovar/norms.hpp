#pragma once

#include "stovar/matrix.hpp"

namespace stovar {

// Witness for var A as the norm of A on sum-zero vectors: +1/2 at the
// variation pair's first column, -1/2 at its second, zero elsewhere. It
// has l1 norm 1, entry sum 0, and |A X0| = var A. Needs two columns.
template <Scalar T>
Vector<T> variation_maximizer(const Matrix<T>& a);

// Witness for var B as the norm of Z -> Z B on rows modulo constants.
// With (k0, l0) the variation pair, z_j = +1 where b(j, k0) > b(j, l0) and
// -1 otherwise, so row_variation(Z0) = 1 and row_variation(Z0 B) = var B.
//
// Only vsum(B_k0 - B_l0) = 0 is used, which holds for every typed B, so
// Z0 carries both signs whenever var B > 0. Throws InvalidArgument for a
// single row, NotTyped, and ZeroVariation.
template <Scalar T>
RowVector<T> row_variation_maximizer(const Matrix<T>& b, Tolerance tol = {});

}  // namespace stovar
