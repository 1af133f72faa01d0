#include "linrel/stargraph.hpp"

#include "linrel/extend.hpp"

#include <algorithm>
#include <cmath>

namespace linrel {

namespace {

const Complex kI(0.0, 1.0);

Vector hub(Index n) { return Vector::Unit(n, 0); }

Matrix pair_column(const Vector& f, const Vector& g) {
  Matrix out(f.size() + g.size(), 1);
  out << f, g;
  return out;
}

LinearRelation add_pair(const LinearRelation& a, const Vector& f,
                              const Vector& g, const Tolerances& tol) {
  const LinearRelation extra =
      LinearRelation(a.space_dim(), Subspace::span(pair_column(f, g), tol));
  return carrier_sum(a, extra, tol).relation;
}

}  // namespace

StarConfig::StarConfig(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) {
    throw PreconditionError("star graph: at least two leaves are required");
  }
  for (const double w : weights_) {
    if (w == 0.0 || !std::isfinite(w)) {
      throw PreconditionError("star graph: weights must be nonzero finite reals");
    }
  }
}

StarConfig StarConfig::unweighted(int leaves) {
  return StarConfig(std::vector<double>(static_cast<std::size_t>(std::max(leaves, 0)), 1.0));
}

Vector StarConfig::weight_vector() const {
  Vector w = Vector::Zero(space_dim());
  for (int j = 0; j < leaves(); ++j) w(j + 1) = weights_[static_cast<std::size_t>(j)];
  return w;
}

double StarConfig::weight_norm_squared() const {
  double s = 0.0;
  for (const double w : weights_) s += w * w;
  return s;
}

LinearRelation build_star(const StarConfig& cfg, const Tolerances& tol) {
  const Index n = cfg.space_dim();
  // Columns f = δ_j, images w_j δ_0.
  Matrix first = Matrix::Zero(n, cfg.leaves());
  Matrix second = Matrix::Zero(n, cfg.leaves());
  for (int j = 0; j < cfg.leaves(); ++j) {
    first(j + 1, j) = 1.0;
    second(0, j) = cfg.weights()[static_cast<std::size_t>(j)];
  }
  return LinearRelation::from_pairs(first, second, tol);
}

LinearRelation star_closure_relation(const StarConfig& cfg, const Tolerances& tol) {
  const Index n = cfg.space_dim();
  Matrix first = Matrix::Zero(n, n);
  Matrix second = Matrix::Zero(n, n);
  for (Index j = 1; j < n; ++j) first(j, j - 1) = 1.0;
  second(0, n - 1) = 1.0;
  return LinearRelation::from_pairs(first, second, tol);
}

LinearRelation star_adjoint(const StarConfig& cfg, const Tolerances& tol) {
  const Index n = cfg.space_dim();
  const Vector w = cfg.weight_vector();
  // (δ_j, 0) for leaves, (δ_0, w) for the hub, and (0, δ_0).
  Matrix first = Matrix::Zero(n, n + 1);
  Matrix second = Matrix::Zero(n, n + 1);
  first.leftCols(n) = Matrix::Identity(n, n);
  second.col(0) = w;
  second(0, n) = 1.0;
  const LinearRelation closed = LinearRelation::from_pairs(first, second, tol);
  const LinearRelation generic = adjoint(build_star(cfg, tol), tol);
  if (!closed.equals(generic, tol)) {
    throw ConsistencyError("star adjoint: closed form differs from the generic adjoint");
  }
  return closed;
}

Subspace star_deficiency(const StarConfig& cfg, Complex zeta, const Tolerances& tol) {
  if (zeta == Complex(0.0)) {
    throw PreconditionError("star deficiency: zeta must be nonzero");
  }
  const Index n = cfg.space_dim();
  const Vector w = cfg.weight_vector();
  const Vector u = hub(n) + w / zeta;
  const Subspace closed = Subspace::span(pair_column(u, zeta * u), tol);
  const Subspace generic = deficiency_space(build_star(cfg, tol), zeta, tol);
  if (!closed.equals(generic, tol)) {
    throw ConsistencyError(
        "star deficiency: closed form differs from the generic deficiency space");
  }
  return closed;
}

LinearRelation star_sa_family(const StarConfig& cfg, Complex beta,
                              const Tolerances& tol) {
  if (std::abs(std::abs(beta) - 1.0) > tol.eq) {
    throw PreconditionError("star family: beta must be unimodular");
  }
  const Index n = cfg.space_dim();
  const Vector w = cfg.weight_vector();
  const Vector d0 = hub(n);
  const Vector f = kI * (beta + 1.0) * w + (beta - 1.0) * d0;
  const Vector g = (beta - 1.0) * w - kI * (beta + 1.0) * d0;
  return add_pair(build_star(cfg, tol), f, g, tol);
}

StarExtension star_extension_alpha(const StarConfig& cfg, double alpha,
                                   const Tolerances& tol) {
  if (alpha == 0.0 || !std::isfinite(alpha)) {
    throw PreconditionError("star extension: alpha must be a nonzero real");
  }
  const Index n = cfg.space_dim();
  const Vector w = cfg.weight_vector();
  const Vector d0 = hub(n);
  LinearRelation rel =
      add_pair(build_star(cfg, tol), d0 + w / alpha, alpha * d0 + w, tol);
  SpectrumReport spec = full_spectrum(rel, tol);
  return {std::move(rel), std::move(spec)};
}

}  // namespace linrel
