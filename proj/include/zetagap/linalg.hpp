#pragma once

// Dense helpers for the small symmetric problems in this project: Cholesky
// and a cyclic Jacobi eigensolver for the (at most 7x7) coefficient matrices,
// and an implicit-shift QL solve of symmetric tridiagonals for
// Golub-Welsch quadrature rules.

#include <cstddef>
#include <vector>

namespace zetagap::linalg {

/// Row-major square matrix sized at runtime.
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<double> a;  // n*n, row-major

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n_) : n(n_), a(n_ * n_, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
/// Throws conditioning_error on a non-positive pivot.
SquareMatrix cholesky(const SquareMatrix& g);

/// Solves L x = b (forward substitution) with L lower triangular.
std::vector<double> solve_lower(const SquareMatrix& l, const std::vector<double>& b);

/// Solves L^T x = b (back substitution).
std::vector<double> solve_lower_transposed(const SquareMatrix& l, const std::vector<double>& b);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  SquareMatrix vectors;        // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi rotations on a symmetric matrix; sweeps until every
/// off-diagonal entry is below tol relative to the Frobenius norm.
EigenDecomposition jacobi_eigen(SquareMatrix a, double tol = 1e-14);

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector (all Golub-Welsch needs).
/// diag has length n, offdiag length n-1. Results sorted by eigenvalue.
struct TridiagEigen {
  std::vector<double> values;
  std::vector<double> first_components;
};
TridiagEigen tridiag_eigen_first_row(std::vector<double> diag, std::vector<double> offdiag);

}  // namespace zetagap::linalg
