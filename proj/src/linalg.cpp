#include "linalg.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>

namespace linrel::detail {

namespace {
constexpr double kAbsoluteFloor = 1e-13;
}

ThinSvd svd(const Matrix& m, const Tolerances& tol) {
  ThinSvd out;
  if (m.cols() == 0) return out;
  if (m.rows() == 0) {
    out.u = Matrix(0, 0);
    out.v = Matrix::Identity(m.cols(), m.cols());
    return out;
  }
  Eigen::BDCSVD<Matrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeFullV);
  out.u = dec.matrixU();
  out.s = dec.singularValues();
  out.v = dec.matrixV();
  if (out.s.size() > 0 && out.s(0) > 0.0) {
    const double cut = std::max(tol.rank * out.s(0), kAbsoluteFloor);
    while (out.rank < out.s.size() && out.s(out.rank) > cut) ++out.rank;
  }
  return out;
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> dec(m);
  return dec.singularValues()(0);
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  if (m.size() == 0) return Eigen::VectorXd(0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

std::vector<PencilEigenvalue> generalized_eigenvalues(Matrix a, Matrix b) {
  const auto n = static_cast<lapack_int>(a.rows());
  require_dims(a.rows() == a.cols() && b.rows() == a.rows() &&
                   b.cols() == a.cols(),
               "generalized eigenproblem needs two square matrices of one size");
  std::vector<PencilEigenvalue> out;
  if (n == 0) return out;
  std::vector<Complex> alpha(static_cast<std::size_t>(n));
  std::vector<Complex> beta(static_cast<std::size_t>(n));
  Complex dummy{};
  const lapack_int info =
      LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, b.data(), n,
                    alpha.data(), beta.data(), &dummy, 1, &dummy, 1);
  if (info != 0) {
    throw ConsistencyError("zggev failed with info = " + std::to_string(info));
  }
  out.reserve(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) out.push_back({alpha[i], beta[i]});
  return out;
}

}  // namespace linrel::detail
