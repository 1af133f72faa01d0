#include "linrel/extend.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace linrel {

namespace {

const Complex kI(0.0, 1.0);

// rel ∩ {(f, ζf) : f ∈ C^n}.
Subspace graph_intersection(const LinearRelation& rel, Complex zeta,
                            const Tolerances& tol) {
  const Index n = rel.space_dim();
  Matrix g(2 * n, n);
  g.topRows(n) = Matrix::Identity(n, n);
  g.bottomRows(n) = zeta * Matrix::Identity(n, n);
  return intersect(rel.carrier(), Subspace::span(g, tol), tol);
}

LinearRelation as_relation(const Subspace& s) {
  return LinearRelation(s.ambient_dim() / 2, s);
}

void check_map(const ExtensionParams& p, const Subspace& source,
               const Subspace& target, const Tolerances& tol) {
  require_dims(p.source.ambient_dim() == 2 * p.base.space_dim(),
               "extension: D must live in C^n + C^n");
  if (!source.contains(p.source, tol)) {
    throw PreconditionError(
        "extension: D is not contained in the source deficiency space");
  }
  require_dims(p.map.rows() == target.dim() && p.map.cols() == p.source.dim(),
               "extension: V matrix must be dim(target) x dim(D)");
  if (p.map.size() == 0) return;
  const Eigen::BDCSVD<Matrix> dec(p.map);
  const Eigen::VectorXd s = dec.singularValues();
  if (p.mode == MapMode::kIsometry) {
    const bool injective = p.map.cols() <= p.map.rows();
    const bool unit = injective && (s.array() - 1.0).abs().maxCoeff() <= tol.eq;
    if (!unit) throw PreconditionError("extension: V is not isometric");
  } else if (s(0) > 1.0 + tol.psd) {
    throw PreconditionError("extension: V is not a contraction");
  }
}

LinearRelation orthogonal_extension(const LinearRelation& a,
                                    const LinearRelation& l,
                                    const Tolerances& tol) {
  if (l.dim() > 0 && a.dim() > 0) {
    const double overlap =
        (a.carrier().basis().adjoint() * l.carrier().basis()).cwiseAbs().maxCoeff();
    if (overlap > tol.eq) {
      throw ConsistencyError("extension: (V - I)D is not orthogonal to A");
    }
  }
  return carrier_sum(a, l, tol).relation;
}

// Form <f + h, g + k> on coefficient pairs of A and L, assembled from the
// two bases separately: the pairwise condition of the splitting in exact form.
bool joint_form_positive(const LinearRelation& a, const LinearRelation& l,
                         const Tolerances& tol) {
  const Index n = a.space_dim();
  Matrix f(n, a.dim() + l.dim());
  Matrix g(n, a.dim() + l.dim());
  f << a.first(), l.first();
  g << a.second(), l.second();
  const Matrix form = f.adjoint() * g;
  if (form.size() == 0) return true;
  const double scale = detail::spectral_norm(f) * detail::spectral_norm(g);
  const double skew = (form - form.adjoint()).cwiseAbs().maxCoeff();
  return skew <= detail::form_threshold(tol.eq, scale) &&
         detail::hermitian_eigenvalues(form)(0) >= -detail::form_threshold(tol.psd, scale);
}

}  // namespace

Subspace deficiency_space(const LinearRelation& a, Complex zeta,
                          const Tolerances& tol) {
  return graph_intersection(adjoint(a, tol), zeta, tol);
}

int deficiency_index(const LinearRelation& a, std::span<const Complex> probes,
                     const Tolerances& tol) {
  if (!is_symmetric(a, tol)) {
    throw PreconditionError("deficiency index: relation is not symmetric");
  }
  if (probes.empty()) {
    throw PreconditionError("deficiency index: no probe points given");
  }
  int index = -1;
  for (const Complex zeta : probes) {
    if (!std::isfinite(resolvent_norm(a, zeta, tol))) {
      throw PreconditionError(
          "deficiency index: probe is not a quasi-regular point");
    }
    const int dim = static_cast<int>(deficiency_space(a, zeta, tol).dim());
    if (index >= 0 && dim != index) {
      throw ConsistencyError("deficiency index: probes disagree (" +
                             std::to_string(index) + " vs " +
                             std::to_string(dim) + ")");
    }
    index = dim;
  }
  return index;
}

LinearRelation extend_semibounded(const LinearRelation& a, double alpha,
                                  const Tolerances& tol) {
  if (!is_symmetric(a, tol)) {
    throw PreconditionError("semi-bounded extension: relation is not symmetric");
  }
  const Bounds b = bounds(a, tol);
  if (b.defined && !(alpha < b.lower) && !(alpha > b.upper)) {
    throw PreconditionError(
        "alpha not below greatest lower bound nor above least upper bound");
  }
  const LinearRelation defect = as_relation(deficiency_space(a, alpha, tol));
  RelationSum s = carrier_sum(a, defect, tol);
  if (!s.direct) {
    throw PreconditionError(
        "semi-bounded extension: A + N_alpha(A*) is not a direct sum");
  }
  return std::move(s.relation);
}

Subspace extension_source(const LinearRelation& a, ExtensionKind kind,
                          const Tolerances& tol) {
  if (kind == ExtensionKind::kVonNeumann) return deficiency_space(a, kI, tol);
  return graph_intersection(scale(-1.0, adjoint(a, tol), tol), 1.0, tol);
}

Subspace extension_target(const LinearRelation& a, ExtensionKind kind,
                          const Tolerances& tol) {
  if (kind == ExtensionKind::kVonNeumann) return deficiency_space(a, -kI, tol);
  return graph_intersection(scale(-1.0, adjoint(a, tol), tol), -1.0, tol);
}

LinearRelation map_minus_identity(const ExtensionParams& p, ExtensionKind kind,
                                  const Tolerances& tol) {
  const Subspace source = extension_source(p.base, kind, tol);
  const Subspace target = extension_target(p.base, kind, tol);
  check_map(p, source, target, tol);
  if (p.source.is_zero()) return LinearRelation::zero(p.base.space_dim());
  const Matrix image = target.basis() * p.map;
  return as_relation(Subspace::span(Matrix(image - p.source.basis()), tol));
}

LinearRelation symmetric_extension_vn(const ExtensionParams& p,
                                      const Tolerances& tol) {
  if (!is_symmetric(p.base, tol)) {
    throw PreconditionError("von Neumann extension: A is not symmetric");
  }
  if (p.mode != MapMode::kIsometry) {
    throw PreconditionError("von Neumann extension: V must be an isometry");
  }
  const LinearRelation l = map_minus_identity(p, ExtensionKind::kVonNeumann, tol);
  return orthogonal_extension(p.base, l, tol);
}

LinearRelation positive_extension_qn(const ExtensionParams& p,
                                     const Tolerances& tol) {
  if (!is_quasi_null(p.base, tol)) {
    throw PreconditionError("positive extension: A is not quasi-null");
  }
  const LinearRelation l =
      map_minus_identity(p, ExtensionKind::kPositiveQuasiNull, tol);
  LinearRelation s = orthogonal_extension(p.base, l, tol);
  // The formula presumes a symmetric extension; (V - I)D lies in -A* by
  // construction but not necessarily in A*.
  if (!is_symmetric(s, tol)) {
    throw PreconditionError(
        "positive extension: (V - I)D is not in A*, so S is not symmetric");
  }
  return s;
}

bool ExtensionChecks::all_pass() const {
  return l_in_adjoint && l_positive && joint_positive && sample_violations == 0 &&
         (!base_quasi_null || cross_orthogonal);
}

ExtensionDecomposition decompose_extension(const LinearRelation& s,
                                           const LinearRelation& a, int samples,
                                           std::uint64_t seed,
                                           const Tolerances& tol) {
  if (!s.contains(a, tol)) {
    throw PreconditionError("decompose extension: A is not contained in S");
  }
  if (!is_symmetric(s, tol) || !is_symmetric(a, tol)) {
    throw PreconditionError("decompose extension: A and S must be symmetric");
  }
  if (!is_positive(a, tol)) {
    throw PreconditionError("decompose extension: A is not positive");
  }
  LinearRelation l = ominus(s, a, tol);
  if (!carrier_sum(a, l, tol).relation.equals(s, tol)) {
    throw ConsistencyError("decompose extension: A + L does not reproduce S");
  }

  ExtensionChecks c;
  c.l_in_adjoint = adjoint(a, tol).contains(l, tol);
  c.l_positive = is_positive(l, tol);
  c.joint_positive = joint_form_positive(a, l, tol);

  const Index n = a.space_dim();
  if (a.dim() > 0 && l.dim() > 0 && samples > 0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> log_scale(-2.0, 2.0);
    auto draw = [&](const Matrix& basis) {
      Vector coeff(basis.cols());
      for (Index i = 0; i < coeff.size(); ++i) {
        coeff(i) = Complex(normal(rng), normal(rng));
      }
      const Vector v = basis * coeff;
      return Vector(v / v.norm());
    };
    c.worst_sample_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
      const Vector fg = std::exp(log_scale(rng)) * draw(a.carrier().basis());
      const Vector hk = draw(l.carrier().basis());
      const Vector f = fg.head(n), g = fg.tail(n);
      const Vector h = hk.head(n), k = hk.tail(n);
      const Complex fk = f.dot(k);  // conjugates f
      const double lhs = f.dot(g).real() + h.dot(k).real();
      const double a_max = std::max(std::abs(fk.real()), std::abs(fk.imag()));
      const double slack = (lhs - 2.0 * a_max) / (fg.squaredNorm() + 1.0);
      c.worst_sample_slack = std::min(c.worst_sample_slack, slack);
      if (slack < -tol.psd) ++c.sample_violations;
    }
    c.samples = samples;
  }

  c.base_quasi_null = is_quasi_null(a, tol);
  if (a.dim() > 0 && l.dim() > 0) {
    const Matrix fa = a.first(), ga = a.second();
    const Matrix hl = l.first(), kl = l.second();
    c.cross_inner_max = std::max((fa.adjoint() * kl).cwiseAbs().maxCoeff(),
                                 (ga.adjoint() * hl).cwiseAbs().maxCoeff());
  }
  c.cross_orthogonal = c.cross_inner_max <= tol.psd;
  return {std::move(l), c};
}

}  // namespace linrel
