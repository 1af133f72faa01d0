#pragma once

#include "linrel/core.hpp"

#include <span>
#include <vector>

namespace linrel {

/// A linear subspace of C^m held as an orthonormal basis (columns).
///
/// Values are immutable after construction. The zero subspace is an ordinary
/// value with a basis of zero columns. Equality is basis independent: two
/// subspaces are equal when their orthogonal projectors are close in the
/// Frobenius norm.
class Subspace {
 public:
  /// Zero subspace of C^m.
  explicit Subspace(Index ambient_dim);

  static Subspace zero(Index ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(Index ambient_dim);

  /// Span of the columns of `generators` (m rows).
  ///
  /// Input that is already orthonormal to working precision is kept
  /// verbatim, so re-spanning an emitted basis reproduces it bit for bit.
  /// Otherwise the basis is the leading left singular vectors, ordered by
  /// descending singular value, with each column's phase fixed so that its
  /// largest entry is real and positive.
  static Subspace span(const Matrix& generators, const Tolerances& tol = {});
  static Subspace span(std::span<const Vector> vectors, Index ambient_dim,
                       const Tolerances& tol = {});

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }

  Matrix projector() const;

  /// Frobenius distance between orthogonal projectors.
  double distance(const Subspace& other) const;
  bool equals(const Subspace& other, const Tolerances& tol = {}) const;

  /// `other` ⊆ *this, measured as ||(I - P) Q_other||_F < tol.eq.
  bool contains(const Subspace& other, const Tolerances& tol = {}) const;
  bool contains(const Vector& v, const Tolerances& tol = {}) const;

  /// Largest deviation of the Gram matrix from the identity.
  double orthonormality_defect() const;

 private:
  explicit Subspace(Matrix orthonormal_basis);

  Matrix basis_;
};

/// Orthogonal complement S^⊥ in the same ambient space.
Subspace complement(const Subspace& s, const Tolerances& tol = {});

/// Largest subspace contained in both.
Subspace intersect(const Subspace& a, const Subspace& b,
                   const Tolerances& tol = {});

struct SubspaceSum {
  Subspace space;
  bool direct = true;      // dim(space) == dim(a) + dim(b)
  bool orthogonal = true;  // a ⊥ b to tol.orth
};

SubspaceSum sum(const Subspace& a, const Subspace& b,
                const Tolerances& tol = {});

/// a ⊖ b = a ∩ b^⊥; requires b ⊆ a.
Subspace ominus(const Subspace& a, const Subspace& b,
                const Tolerances& tol = {});

/// Orthonormal basis of the numerical null space of `m` (columns), using the
/// relative singular-value threshold tol.rank.
Matrix null_space(const Matrix& m, const Tolerances& tol = {});

/// Numerical rank of `m` under the same threshold.
Index numerical_rank(const Matrix& m, const Tolerances& tol = {});

}  // namespace linrel
