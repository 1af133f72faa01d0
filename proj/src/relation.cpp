#include "linrel/relation.hpp"

namespace linrel {

namespace {

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

void require_same_space(const LinearRelation& a, const LinearRelation& b,
                        const char* op) {
  require_dims(a.space_dim() == b.space_dim(),
               std::string(op) + ": space dimension mismatch");
}

// Block-diagonal basis of M ⊕ M inside C^{2n}.
Subspace doubled(const Subspace& m) {
  const Index n = m.ambient_dim();
  Matrix b = Matrix::Zero(2 * n, 2 * m.dim());
  b.topLeftCorner(n, m.dim()) = m.basis();
  b.bottomRightCorner(n, m.dim()) = m.basis();
  return Subspace::span(b);
}

}  // namespace

LinearRelation::LinearRelation(Index space_dim, Subspace carrier)
    : n_(space_dim), carrier_(std::move(carrier)) {
  require_dims(n_ > 0, "relation space dimension must be positive");
  require_dims(carrier_.ambient_dim() == 2 * n_,
               "relation carrier must live in C^n + C^n");
}

LinearRelation LinearRelation::zero(Index n) {
  return LinearRelation(n, Subspace::zero(2 * n));
}

LinearRelation LinearRelation::identity(Index n) {
  const Matrix id = Matrix::Identity(n, n);
  return from_pairs(id, id);
}

LinearRelation LinearRelation::from_pairs(const Matrix& first,
                                          const Matrix& second,
                                          const Tolerances& tol) {
  require_dims(first.rows() == second.rows() && first.cols() == second.cols(),
               "relation pairs: component shapes differ");
  require_dims(first.rows() > 0, "relation space dimension must be positive");
  return LinearRelation(first.rows(), Subspace::span(stack(first, second), tol));
}

LinearRelation LinearRelation::from_operator(const Matrix& op,
                                             const Subspace& domain,
                                             const Tolerances& tol) {
  require_dims(op.rows() == op.cols(), "operator matrix must be square");
  require_dims(domain.ambient_dim() == op.rows(),
               "operator domain must live in C^n");
  const Matrix& q = domain.basis();
  return from_pairs(q, op * q, tol);
}

LinearRelation LinearRelation::graph(const Matrix& op, const Tolerances& tol) {
  require_dims(op.rows() == op.cols(), "operator matrix must be square");
  return from_operator(op, Subspace::full(op.rows()), tol);
}

bool LinearRelation::contains(const LinearRelation& s,
                              const Tolerances& tol) const {
  require_same_space(*this, s, "contains");
  return carrier_.contains(s.carrier_, tol);
}

bool LinearRelation::equals(const LinearRelation& s,
                            const Tolerances& tol) const {
  require_same_space(*this, s, "equals");
  return carrier_.equals(s.carrier_, tol);
}

double LinearRelation::distance(const LinearRelation& s) const {
  require_same_space(*this, s, "distance");
  return carrier_.distance(s.carrier_);
}

Subspace domain(const LinearRelation& t, const Tolerances& tol) {
  return Subspace::span(t.first(), tol);
}

Subspace range(const LinearRelation& t, const Tolerances& tol) {
  return Subspace::span(t.second(), tol);
}

// ker T is carrier ∩ (C^n ⊕ {0}): the coefficient vectors c with G c = 0.
Subspace kernel(const LinearRelation& t, const Tolerances& tol) {
  if (t.dim() == 0) return Subspace::zero(t.space_dim());
  const Matrix c = null_space(t.second(), tol);
  return Subspace::span(Matrix(t.first() * c), tol);
}

Subspace multivalued_part(const LinearRelation& t, const Tolerances& tol) {
  if (t.dim() == 0) return Subspace::zero(t.space_dim());
  const Matrix c = null_space(t.first(), tol);
  return Subspace::span(Matrix(t.second() * c), tol);
}

RelationParts parts(const LinearRelation& t, const Tolerances& tol) {
  return {domain(t, tol), range(t, tol), kernel(t, tol),
          multivalued_part(t, tol)};
}

LinearRelation add(const LinearRelation& t, const LinearRelation& s,
                   const Tolerances& tol) {
  require_same_space(t, s, "add");
  const Index n = t.space_dim();
  if (t.dim() == 0 || s.dim() == 0) return LinearRelation::zero(n);
  // Coefficients (a, b) with F_T a = F_S b share the first component.
  Matrix firsts(n, t.dim() + s.dim());
  firsts << t.first(), -s.first();
  const Matrix c = null_space(firsts, tol);
  if (c.cols() == 0) return LinearRelation::zero(n);
  const Matrix a = c.topRows(t.dim());
  const Matrix b = c.bottomRows(s.dim());
  return LinearRelation::from_pairs(t.first() * a,
                                    t.second() * a + s.second() * b, tol);
}

LinearRelation scale(Complex zeta, const LinearRelation& t,
                     const Tolerances& tol) {
  return LinearRelation::from_pairs(t.first(), zeta * t.second(), tol);
}

LinearRelation compose(const LinearRelation& s, const LinearRelation& t,
                       const Tolerances& tol) {
  require_same_space(t, s, "compose");
  const Index n = t.space_dim();
  if (t.dim() == 0 || s.dim() == 0) return LinearRelation::zero(n);
  // Coefficients (a, b) with G_T a = F_S b chain the middle component.
  Matrix middle(n, t.dim() + s.dim());
  middle << t.second(), -s.first();
  const Matrix c = null_space(middle, tol);
  if (c.cols() == 0) return LinearRelation::zero(n);
  return LinearRelation::from_pairs(t.first() * c.topRows(t.dim()),
                                    s.second() * c.bottomRows(s.dim()), tol);
}

LinearRelation inverse(const LinearRelation& t) {
  return LinearRelation(t.space_dim(),
                        Subspace::span(stack(t.second(), t.first())));
}

LinearRelation shift(const LinearRelation& t, Complex zeta,
                     const Tolerances& tol) {
  const Matrix f = t.first();
  return LinearRelation::from_pairs(f, t.second() - zeta * f, tol);
}

LinearRelation adjoint(const LinearRelation& t, const Tolerances& tol) {
  // {(g, -f)} is a unitary image of the carrier; its complement is T*.
  const Subspace flipped = Subspace::span(stack(t.second(), -t.first()));
  return LinearRelation(t.space_dim(), complement(flipped, tol));
}

LinearRelation orthogonal_complement(const LinearRelation& t,
                                     const Tolerances& tol) {
  return LinearRelation(t.space_dim(), complement(t.carrier(), tol));
}

LinearRelation intersect(const LinearRelation& t, const LinearRelation& s,
                         const Tolerances& tol) {
  require_same_space(t, s, "intersect");
  return LinearRelation(t.space_dim(), intersect(t.carrier(), s.carrier(), tol));
}

LinearRelation ominus(const LinearRelation& t, const LinearRelation& s,
                      const Tolerances& tol) {
  require_same_space(t, s, "ominus");
  return LinearRelation(t.space_dim(), ominus(t.carrier(), s.carrier(), tol));
}

RelationSum carrier_sum(const LinearRelation& t, const LinearRelation& s,
                        const Tolerances& tol) {
  require_same_space(t, s, "sum");
  SubspaceSum out = sum(t.carrier(), s.carrier(), tol);
  return {LinearRelation(t.space_dim(), std::move(out.space)), out.direct,
          out.orthogonal};
}

Decomposition decompose(const LinearRelation& t, const Tolerances& tol) {
  const Index n = t.space_dim();
  const Subspace mul = multivalued_part(t, tol);
  LinearRelation inf = LinearRelation::from_pairs(
      Matrix::Zero(n, mul.dim()), mul.basis(), tol);
  LinearRelation op = ominus(t, inf, tol);
  return {std::move(op), std::move(inf)};
}

Restriction restrict_to(const LinearRelation& t, const LinearRelation& s,
                        const Tolerances& tol) {
  require_same_space(t, s, "restrict");
  Subspace sub = complement(multivalued_part(s, tol), tol);
  LinearRelation r(t.space_dim(), intersect(t.carrier(), doubled(sub), tol));
  return {std::move(r), std::move(sub)};
}

}  // namespace linrel
