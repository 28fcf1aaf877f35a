#pragma once

#include <vector>

#include "knotrep/int_matrix.hpp"

namespace knotrep {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0,
/// zeros trailing. V_inverse is carried along so callers can move between
/// the original and the diagonal coordinates in both directions.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix V_inverse;
  IntMatrix D;

  std::size_t rows() const { return D.rows(); }
  std::size_t cols() const { return D.cols(); }
  /// min(rows, cols) diagonal entries.
  std::vector<mpz_class> diagonal() const;
};

/// Pivots on the smallest nonzero absolute value, ties broken in row-major
/// order, so the result is a deterministic function of A.
SmithDecomposition smith_normal_form(const IntMatrix& A);

}  // namespace knotrep
