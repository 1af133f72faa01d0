#pragma once

// Random corpora and independent oracles shared by the unit and acceptance
// tests. Oracles avoid the library's own complement/null-space routines:
// kernels come from Eigen's FullPivLU and orthonormalization from
// HouseholderQR.

#include "linrel/classify.hpp"
#include "linrel/relation.hpp"
#include "linrel/stargraph.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <random>

namespace testsupport {

using linrel::Complex;
using linrel::Index;
using linrel::LinearRelation;
using linrel::Matrix;
using linrel::Subspace;
using linrel::Vector;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  Complex complex() { return {normal(), normal()}; }

  Matrix matrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) m(i, j) = complex();
    return m;
  }

  Matrix unitary(Index n) {
    Eigen::HouseholderQR<Matrix> qr(matrix(n, n));
    return qr.householderQ() * Matrix::Identity(n, n);
  }

  Matrix hermitian(Index n) {
    const Matrix a = matrix(n, n);
    return (a + a.adjoint()) / 2.0;
  }

  /// Hermitian matrix with the given eigenvalues in a random basis.
  Matrix hermitian_with(const Eigen::VectorXd& ev) {
    const Matrix u = unitary(ev.size());
    return u * ev.cast<Complex>().asDiagonal() * u.adjoint();
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_;
};

/// Orthonormal basis of the column span, by column-pivoted QR.
inline Matrix orthonormal_columns(const Matrix& m, double tol = 1e-10) {
  if (m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  qr.setThreshold(tol);
  const Index r = qr.rank();
  const Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.rows());
  return q.leftCols(r);
}

/// Kernel of m by FullPivLU, orthonormalized.
inline Matrix lu_kernel(const Matrix& m, double tol = 1e-10) {
  if (m.rows() == 0) return Matrix::Identity(m.cols(), m.cols());
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(tol);
  if (lu.rank() == m.cols()) return Matrix(m.cols(), 0);
  return orthonormal_columns(lu.kernel(), tol);
}

inline Matrix projector_of(const Matrix& basis) { return basis * basis.adjoint(); }

inline double projector_distance(const Matrix& a, const Matrix& b) {
  return (projector_of(a) - projector_of(b)).norm();
}

/// T* = {(h, k) : <k, f> = <h, g> for all (f, g) ∈ T}, i.e. the kernel of
/// [G^H, -F^H].
inline Matrix adjoint_oracle(const LinearRelation& t) {
  const Index n = t.space_dim();
  Matrix eq(t.dim(), 2 * n);
  eq << t.second().adjoint(), -t.first().adjoint();
  if (t.dim() == 0) return Matrix::Identity(2 * n, 2 * n);
  return lu_kernel(eq);
}

/// Dense pair map (f, g) -> (f + g, f - g), orthonormalized by QR.
inline Matrix krein_oracle(const LinearRelation& t) {
  const Matrix f = t.first(), g = t.second();
  Matrix m(2 * t.space_dim(), t.dim());
  m << f + g, f - g;
  return orthonormal_columns(m);
}

/// A random relation of dimension d in C^n ⊕ C^n.
inline LinearRelation random_relation(Rng& r, Index n, Index d) {
  return LinearRelation(n, Subspace::span(r.matrix(2 * n, d)));
}

/// Symmetric relation built from a unitary frame U = [D | D^⊥]:
///   pairs (U_D c, U_D H c + U_⊥ B c) and (0, m) for m in a subspace M ⊆ D^⊥.
/// Every symmetric relation has this shape; the bounds are the extreme
/// eigenvalues of H and the deficiency index is n - k - r.
struct SymmetricSample {
  LinearRelation relation;
  Matrix h;   // k x k Hermitian
  Matrix b;   // (n - k) x k
  Index k;    // dim dom
  Index r;    // dim mul
};

inline SymmetricSample symmetric_from(Rng& rng, Index n, const Matrix& h,
                                      const Matrix& b, Index r) {
  const Index k = h.rows();
  const Matrix u = rng.unitary(n);
  const Matrix ud = u.leftCols(k);
  const Matrix up = u.rightCols(n - k);
  Matrix first = Matrix::Zero(n, k + r);
  Matrix second = Matrix::Zero(n, k + r);
  first.leftCols(k) = ud;
  second.leftCols(k) = ud * h + up * b;
  if (r > 0) second.rightCols(r) = up * rng.unitary(n - k).leftCols(r);
  return {LinearRelation::from_pairs(first, second), h, b, k, r};
}

/// Random symmetric relation: k = dim dom, r = dim mul, B scaled by `cross`.
inline SymmetricSample random_symmetric(Rng& rng, Index n, Index k, Index r,
                                        const Eigen::VectorXd& ev,
                                        double cross = 1.0) {
  return symmetric_from(rng, n, rng.hermitian_with(ev),
                        cross * rng.matrix(n - k, k), r);
}

inline Eigen::VectorXd random_reals(Rng& rng, Index k, double lo, double hi) {
  Eigen::VectorXd v(k);
  for (Index i = 0; i < k; ++i) v(i) = rng.uniform(lo, hi);
  return v;
}

/// Dense matrix of the star extension A_α, which is an operator on C^{N+1}:
/// [[α - |w|^2/α, w^T], [w, 0]].
inline Matrix star_alpha_matrix(const linrel::StarConfig& cfg, double alpha) {
  const Index n = cfg.space_dim();
  const Vector w = cfg.weight_vector();
  Matrix m = Matrix::Zero(n, n);
  m(0, 0) = alpha - cfg.weight_norm_squared() / alpha;
  for (Index j = 1; j < n; ++j) {
    m(0, j) = w(j);
    m(j, 0) = w(j);
  }
  return m;
}

inline linrel::StarConfig random_star(Rng& rng, int leaves) {
  std::vector<double> w(static_cast<std::size_t>(leaves));
  for (double& x : w) x = rng.uniform(0.2, 2.0) * (rng.uniform(0, 1) < 0.5 ? -1.0 : 1.0);
  return linrel::StarConfig(std::move(w));
}

}  // namespace testsupport
