#pragma once

#include <vector>

namespace netdesign {

/// Minimal dense square matrix, row-major.
struct SquareMatrix {
  int n = 0;
  std::vector<double> data;

  SquareMatrix() = default;
  explicit SquareMatrix(int n_) : n(n_), data(static_cast<std::size_t>(n_) * n_, 0.0) {}

  double& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

struct EigenDecomposition {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column-major: component i of eigenvector k at [k*n + i]
  int n = 0;
  int sweeps = 0;

  const double* vector(int k) const { return vectors.data() + static_cast<std::size_t>(k) * n; }
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Converged when the off-diagonal Frobenius norm drops below
/// tol * max(1, ||A||_F). Sizes here stay small (<= ~50), so robustness is
/// preferred over speed. Throws NumericError (reporting the sweep count)
/// if max_sweeps is exceeded.
EigenDecomposition jacobi_eigen(const SquareMatrix& a, double tol = 1e-12, int max_sweeps = 100);

}  // namespace netdesign
