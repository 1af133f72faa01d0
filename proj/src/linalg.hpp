#pragma once

#include <algorithm>

// Dense helpers shared by the library sources. Not installed.

#include "linrel/core.hpp"

#include <vector>

namespace linrel::detail {

struct ThinSvd {
  Matrix u;
  Eigen::VectorXd s;
  Matrix v;  // full V, so the trailing columns span the null space
  Index rank = 0;
};

/// SVD with the library's rank rule: relative threshold tol.rank plus an
/// absolute floor for blocks of orthonormal bases.
ThinSvd svd(const Matrix& m, const Tolerances& tol);

double spectral_norm(const Matrix& m);

/// Threshold for entries of a form F^H G built from an orthonormal carrier
/// basis: relative to ||F|| ||G||, with an absolute floor for roundoff that
/// survives when F or G vanishes.
inline double form_threshold(double tol, double scale) {
  return std::max(tol * scale, 1e-13);
}

Matrix hermitian_part(const Matrix& m);

/// Eigenvalues (ascending) of the Hermitian part of `m`.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

struct PencilEigenvalue {
  Complex alpha;
  Complex beta;
};

/// Generalized eigenvalues alpha/beta of the square pencil a x = λ b x
/// (LAPACK zggev).
std::vector<PencilEigenvalue> generalized_eigenvalues(Matrix a, Matrix b);

}  // namespace linrel::detail
