#include "linrel/subspace.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <cmath>

namespace linrel {

namespace {

// Deviation from an exact orthonormal Gram matrix tolerated before span()
// re-orthonormalizes its input.
constexpr double kVerbatimDefect = 1e-13;

double gram_defect(const Matrix& q) {
  if (q.cols() == 0) return 0.0;
  const Matrix gram = q.adjoint() * q;
  return (gram - Matrix::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

void fix_phases(Matrix& q) {
  for (Index j = 0; j < q.cols(); ++j) {
    Index imax = 0;
    q.col(j).cwiseAbs().maxCoeff(&imax);
    const double mag = std::abs(q(imax, j));
    if (mag > 0.0) q.col(j) *= std::conj(q(imax, j)) / mag;
  }
}

Index rank_from_singular_values(const Eigen::VectorXd& s, double rel) {
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = rel * s(0);
  Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  return r;
}

}  // namespace

Subspace::Subspace(Index ambient_dim) : basis_(ambient_dim, 0) {
  require_dims(ambient_dim > 0, "subspace ambient dimension must be positive");
}

Subspace::Subspace(Matrix orthonormal_basis)
    : basis_(std::move(orthonormal_basis)) {}

Subspace Subspace::full(Index ambient_dim) {
  require_dims(ambient_dim > 0, "subspace ambient dimension must be positive");
  return Subspace(Matrix(Matrix::Identity(ambient_dim, ambient_dim)));
}

Subspace Subspace::span(const Matrix& generators, const Tolerances& tol) {
  const Index m = generators.rows();
  require_dims(m > 0, "subspace ambient dimension must be positive");
  if (generators.cols() == 0) return Subspace(m);
  if (!generators.allFinite()) throw DimensionError("non-finite generator entry");
  if (generators.cols() <= m && gram_defect(generators) < kVerbatimDefect) {
    return Subspace(Matrix(generators));
  }
  Eigen::BDCSVD<Matrix> svd(generators, Eigen::ComputeThinU);
  const Index r = rank_from_singular_values(svd.singularValues(), tol.rank);
  Matrix q = svd.matrixU().leftCols(r);
  fix_phases(q);
  return Subspace(std::move(q));
}

Subspace Subspace::span(std::span<const Vector> vectors, Index ambient_dim,
                        const Tolerances& tol) {
  Matrix g(ambient_dim, static_cast<Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    require_dims(vectors[j].size() == ambient_dim,
                 "span: vector length differs from ambient dimension");
    g.col(static_cast<Index>(j)) = vectors[j];
  }
  return span(g, tol);
}

Matrix Subspace::projector() const { return basis_ * basis_.adjoint(); }

double Subspace::distance(const Subspace& other) const {
  require_dims(ambient_dim() == other.ambient_dim(),
               "subspace distance: ambient dimension mismatch");
  return (projector() - other.projector()).norm();
}

bool Subspace::equals(const Subspace& other, const Tolerances& tol) const {
  return distance(other) < tol.eq;
}

bool Subspace::contains(const Subspace& other, const Tolerances& tol) const {
  require_dims(ambient_dim() == other.ambient_dim(),
               "subspace containment: ambient dimension mismatch");
  if (other.is_zero()) return true;
  const Matrix& q = other.basis();
  const Matrix residual = q - basis_ * (basis_.adjoint() * q);
  return residual.norm() < tol.eq;
}

bool Subspace::contains(const Vector& v, const Tolerances& tol) const {
  require_dims(v.size() == ambient_dim(),
               "subspace membership: vector length mismatch");
  const double nv = v.norm();
  if (nv == 0.0) return true;
  const Vector residual = v - basis_ * (basis_.adjoint() * v);
  return residual.norm() < tol.eq * nv;
}

double Subspace::orthonormality_defect() const { return gram_defect(basis_); }

Matrix null_space(const Matrix& m, const Tolerances& tol) {
  const Index q = m.cols();
  if (q == 0) return Matrix(0, 0);
  const detail::ThinSvd dec = detail::svd(m, tol);
  return dec.v.rightCols(q - dec.rank);
}

Index numerical_rank(const Matrix& m, const Tolerances& tol) {
  if (m.size() == 0) return 0;
  return detail::svd(m, tol).rank;
}

Subspace complement(const Subspace& s, const Tolerances& tol) {
  const Index m = s.ambient_dim();
  if (s.is_zero()) return Subspace::full(m);
  Matrix n = null_space(s.basis().adjoint(), tol);
  return Subspace::span(n, tol);
}

Subspace intersect(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  require_dims(a.ambient_dim() == b.ambient_dim(),
               "intersect: ambient dimension mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
  Matrix stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.basis(), -b.basis();
  const Matrix coeffs = null_space(stacked, tol);
  if (coeffs.cols() == 0) return Subspace(a.ambient_dim());
  // a*x = b*y for each null vector (x, y); average both sides.
  const Matrix common = a.basis() * coeffs.topRows(a.dim()) +
                        b.basis() * coeffs.bottomRows(b.dim());
  return Subspace::span(common, tol);
}

SubspaceSum sum(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  require_dims(a.ambient_dim() == b.ambient_dim(),
               "sum: ambient dimension mismatch");
  Matrix stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.basis(), b.basis();
  SubspaceSum out{Subspace::span(stacked, tol), true, true};
  out.direct = out.space.dim() == a.dim() + b.dim();
  if (!a.is_zero() && !b.is_zero()) {
    out.orthogonal =
        (a.basis().adjoint() * b.basis()).cwiseAbs().maxCoeff() < tol.orth;
  }
  return out;
}

Subspace ominus(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  require_dims(a.ambient_dim() == b.ambient_dim(),
               "ominus: ambient dimension mismatch");
  if (!a.contains(b, tol)) {
    throw PreconditionError("ominus: second subspace is not contained in the first");
  }
  if (b.is_zero()) return a;
  if (a.dim() == 0) return a;
  const Matrix n = null_space(b.basis().adjoint() * a.basis(), tol);
  return Subspace::span(Matrix(a.basis() * n), tol);
}

}  // namespace linrel
