#pragma once

#include "linrel/subspace.hpp"

namespace linrel {

/// A linear relation T ⊆ C^n ⊕ C^n, stored only through its carrier
/// subspace of C^{2n}. The first n coordinates of a carrier vector are the
/// first component f, the last n the second component g.
///
/// Every finite-dimensional relation is closed, so there is no closure
/// operation. The zero relation (empty carrier) is a valid value.
class LinearRelation {
 public:
  LinearRelation(Index space_dim, Subspace carrier);

  static LinearRelation zero(Index n);
  /// Graph of the identity operator on C^n.
  static LinearRelation identity(Index n);
  /// Span of the pairs (first.col(j), second.col(j)).
  static LinearRelation from_pairs(const Matrix& first, const Matrix& second,
                                   const Tolerances& tol = {});
  /// Graph {(f, M f) : f ∈ domain}.
  static LinearRelation from_operator(const Matrix& op, const Subspace& domain,
                                      const Tolerances& tol = {});
  /// Graph of `op` on all of C^n.
  static LinearRelation graph(const Matrix& op, const Tolerances& tol = {});

  Index space_dim() const { return n_; }
  Index dim() const { return carrier_.dim(); }
  const Subspace& carrier() const { return carrier_; }

  /// First components of the carrier basis (n x dim).
  Matrix first() const { return carrier_.basis().topRows(n_); }
  /// Second components of the carrier basis (n x dim).
  Matrix second() const { return carrier_.basis().bottomRows(n_); }

  /// S ⊆ *this.
  bool contains(const LinearRelation& s, const Tolerances& tol = {}) const;
  bool equals(const LinearRelation& s, const Tolerances& tol = {}) const;
  double distance(const LinearRelation& s) const;

 private:
  Index n_;
  Subspace carrier_;
};

struct RelationParts {
  Subspace dom;
  Subspace ran;
  Subspace ker;
  Subspace mul;
};

RelationParts parts(const LinearRelation& t, const Tolerances& tol = {});
Subspace domain(const LinearRelation& t, const Tolerances& tol = {});
Subspace range(const LinearRelation& t, const Tolerances& tol = {});
Subspace kernel(const LinearRelation& t, const Tolerances& tol = {});
Subspace multivalued_part(const LinearRelation& t, const Tolerances& tol = {});

/// T + S = {(f, g + h) : (f, g) ∈ T, (f, h) ∈ S}.
LinearRelation add(const LinearRelation& t, const LinearRelation& s,
                   const Tolerances& tol = {});
/// ζT = {(f, ζg) : (f, g) ∈ T}.
LinearRelation scale(Complex zeta, const LinearRelation& t,
                     const Tolerances& tol = {});
/// ST = {(f, k) : (f, g) ∈ T, (g, k) ∈ S}.
LinearRelation compose(const LinearRelation& s, const LinearRelation& t,
                       const Tolerances& tol = {});
/// T^{-1} = {(g, f) : (f, g) ∈ T}.
LinearRelation inverse(const LinearRelation& t);
/// T - ζI = {(f, g - ζf)}; equal to add(t, scale(-ζ, identity)).
LinearRelation shift(const LinearRelation& t, Complex zeta,
                     const Tolerances& tol = {});

/// T* = (-T^{-1})^⊥, the pairs (h, k) with <k, f> = <h, g> for all (f, g) ∈ T.
LinearRelation adjoint(const LinearRelation& t, const Tolerances& tol = {});

/// Orthogonal complement of the carrier, as a relation.
LinearRelation orthogonal_complement(const LinearRelation& t,
                                     const Tolerances& tol = {});

/// T ∩ S and T ⊖ S at carrier level.
LinearRelation intersect(const LinearRelation& t, const LinearRelation& s,
                         const Tolerances& tol = {});
LinearRelation ominus(const LinearRelation& t, const LinearRelation& s,
                      const Tolerances& tol = {});

/// Subspace sum of carriers (T ∔ S or T ⊕ S), with the directness and
/// orthogonality flags of the underlying sum.
struct RelationSum {
  LinearRelation relation;
  bool direct = true;
  bool orthogonal = true;
};
RelationSum carrier_sum(const LinearRelation& t, const LinearRelation& s,
                        const Tolerances& tol = {});

/// T = T_op ⊕ T_inf with T_inf = {0} ⊕ mul T.
struct Decomposition {
  LinearRelation op;
  LinearRelation inf;
};
Decomposition decompose(const LinearRelation& t, const Tolerances& tol = {});

/// T_S = T ∩ ((mul S)^⊥ ⊕ (mul S)^⊥). The relation keeps coordinates of C^n;
/// `sub_ambient` records the smaller space (mul S)^⊥ it lives in.
struct Restriction {
  LinearRelation relation;
  Subspace sub_ambient;
};
Restriction restrict_to(const LinearRelation& t, const LinearRelation& s,
                        const Tolerances& tol = {});

}  // namespace linrel
