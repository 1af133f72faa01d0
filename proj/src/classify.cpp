#include "linrel/classify.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace linrel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Form {
  Matrix f;
  Matrix g;
  Matrix fg;     // F^H G
  double scale;  // ||F|| ||G||
};

Form form_of(const LinearRelation& t) {
  Form out{t.first(), t.second(), Matrix(), 0.0};
  out.fg = out.f.adjoint() * out.g;
  out.scale = detail::spectral_norm(out.f) * detail::spectral_norm(out.g);
  return out;
}

bool hermitian_form(const Form& form, const Tolerances& tol) {
  if (form.fg.size() == 0) return true;
  const double skew = (form.fg - form.fg.adjoint()).cwiseAbs().maxCoeff();
  return skew <= detail::form_threshold(tol.eq, form.scale);
}

bool nonnegative_form(const Form& form, const Tolerances& tol) {
  if (form.fg.size() == 0) return true;
  return detail::hermitian_eigenvalues(form.fg)(0) >= -detail::form_threshold(tol.psd, form.scale);
}

// Orthonormal coordinates of dom T and the compressed operator part
// H = U^H G V Σ^{-1}, so that <f, g> = y^H H y for f = U y.
struct OperatorPart {
  Matrix u;
  Matrix h;
};

OperatorPart operator_part(const LinearRelation& t, const Tolerances& tol) {
  const Matrix f = t.first();
  const detail::ThinSvd dec = detail::svd(f, tol);
  const Index d = dec.rank;
  OperatorPart out;
  out.u = dec.u.leftCols(d);
  const Eigen::VectorXd inv_s = dec.s.head(d).cwiseInverse();
  out.h = out.u.adjoint() * t.second() * dec.v.leftCols(d) * inv_s.asDiagonal();
  return out;
}

std::vector<Eigenvalue> cluster(std::vector<Complex> values, double radius) {
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<Eigenvalue> out;
  std::vector<bool> used(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (used[i]) continue;
    Complex acc = values[i];
    int count = 1;
    used[i] = true;
    // Chain through neighbours so split multiple eigenvalues merge.
    for (bool grew = true; grew;) {
      grew = false;
      const Complex center = acc / static_cast<double>(count);
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        if (!used[j] && std::abs(values[j] - center) <= radius) {
          used[j] = true;
          acc += values[j];
          ++count;
          grew = true;
        }
      }
    }
    out.push_back({acc / static_cast<double>(count), count});
  }
  return out;
}

SpectrumReport selfadjoint_spectrum(const LinearRelation& t,
                                    const Tolerances& tol) {
  SpectrumReport rep;
  const OperatorPart op = operator_part(t, tol);
  const Eigen::VectorXd ev = detail::hermitian_eigenvalues(op.h);
  std::vector<Complex> values;
  double vmax = 1.0;
  for (Index i = 0; i < ev.size(); ++i) {
    values.emplace_back(ev(i), 0.0);
    vmax = std::max(vmax, std::abs(ev(i)));
  }
  rep.eigenvalues = cluster(std::move(values), tol.cluster * vmax);
  return rep;
}

SpectrumReport general_spectrum(const LinearRelation& t, const Tolerances& tol) {
  SpectrumReport rep;
  const Matrix f = t.first();
  const Matrix g = t.second();
  const detail::ThinSvd dec = detail::svd(f, tol);
  const Index d = dec.rank;
  if (d == 0) return rep;  // dom T = {0}: no pair (f, ζf) with f != 0

  // Deflate the multivalued part: equations live in (mul T)^⊥.
  const Matrix kerf = dec.v.rightCols(t.dim() - d);
  const Subspace mul = Subspace::span(Matrix(g * kerf), tol);
  const Subspace rows = complement(mul, tol);
  const Index m = rows.dim();
  if (d > m) {
    rep.point_shape = SpectrumShape::kWholePlane;
    return rep;
  }
  const Matrix vd = dec.v.leftCols(d);
  Matrix a = rows.basis().adjoint() * f * vd;
  Matrix b = rows.basis().adjoint() * g * vd;

  // Compress a tall pencil onto the joint range, then (if still tall) onto
  // d pseudo-random directions; spurious roots are filtered below.
  if (m > d) {
    Matrix joint(m, 2 * d);
    joint << a, b;
    const Subspace r = Subspace::span(joint, tol);
    if (r.dim() < d) {
      // rank(B - ζA) < d for every ζ.
      rep.point_shape = SpectrumShape::kWholePlane;
      return rep;
    }
    a = r.basis().adjoint() * a;
    b = r.basis().adjoint() * b;
  }

  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Matrix ca = a;
    Matrix cb = b;
    if (a.rows() > d) {
      Matrix proj(d, a.rows());
      for (Index i = 0; i < proj.size(); ++i) {
        proj(i) = Complex(normal(rng), normal(rng));
      }
      ca = proj * a;
      cb = proj * b;
    }
    const double pencil_scale =
        std::max(detail::spectral_norm(ca), detail::spectral_norm(cb));
    const auto roots = detail::generalized_eigenvalues(cb, ca);
    bool singular = false;
    std::vector<Complex> finite;
    for (const auto& r : roots) {
      const double floor = 1e-12 * pencil_scale;
      if (std::abs(r.alpha) <= floor && std::abs(r.beta) <= floor) {
        singular = true;
        break;
      }
      if (std::abs(r.beta) > 1e-13 * std::abs(r.alpha)) {
        finite.push_back(r.alpha / r.beta);
      }
    }
    if (singular) {
      // Either the relation's pencil is singular (kernel for every ζ) or the
      // compression was unlucky; probe a generic point to tell them apart.
      const Complex probe(0.3183098861837907, 0.5772156649015329);
      if (eigen_multiplicity(t, probe, tol) > 0) {
        rep.point_shape = SpectrumShape::kWholePlane;
        return rep;
      }
      if (a.rows() == d) break;
      continue;
    }
    double vmax = 1.0;
    for (const Complex z : finite) vmax = std::max(vmax, std::abs(z));
    for (const Eigenvalue& e : cluster(std::move(finite), tol.cluster * vmax)) {
      const int mult = eigen_multiplicity(t, e.value, tol);
      if (mult > 0) rep.eigenvalues.push_back({e.value, mult});
    }
    return rep;
  }
  throw ConsistencyError("point spectrum: pencil compression stayed singular");
}

}  // namespace

bool is_symmetric(const LinearRelation& t, const Tolerances& tol) {
  return hermitian_form(form_of(t), tol);
}

bool is_selfadjoint(const LinearRelation& t, const Tolerances& tol) {
  const bool structural = is_symmetric(t, tol) && t.dim() == t.space_dim();
  const double dist = t.distance(adjoint(t, tol));
  const bool by_adjoint = dist < tol.eq;
  if (structural != by_adjoint) {
    // Near the threshold the two criteria may round differently; a clear
    // disagreement means one route is wrong.
    const bool clear = structural ? dist > 100.0 * tol.eq : dist < 0.01 * tol.eq;
    if (clear) {
      throw ConsistencyError("selfadjointness: adjoint distance " +
                             std::to_string(dist) +
                             " disagrees with the dimension criterion");
    }
  }
  return structural;
}

bool is_positive(const LinearRelation& t, const Tolerances& tol) {
  const Form form = form_of(t);
  return hermitian_form(form, tol) && nonnegative_form(form, tol);
}

bool is_quasi_null(const LinearRelation& t, const Tolerances& tol) {
  const Form form = form_of(t);
  if (form.fg.size() == 0) return true;
  return form.fg.cwiseAbs().maxCoeff() <= detail::form_threshold(tol.eq, form.scale) &&
         hermitian_form(form, tol) && nonnegative_form(form, tol);
}

bool is_contraction(const LinearRelation& t, const Tolerances& tol) {
  if (t.dim() == 0) return true;
  const Matrix f = t.first();
  const Matrix g = t.second();
  const Matrix gap = f.adjoint() * f - g.adjoint() * g;
  return detail::hermitian_eigenvalues(gap)(0) >= -tol.psd;
}

bool is_isometry(const LinearRelation& t, const Tolerances& tol) {
  if (t.dim() == 0) return true;
  const Matrix f = t.first();
  const Matrix g = t.second();
  const Matrix gap = f.adjoint() * f - g.adjoint() * g;
  return gap.cwiseAbs().maxCoeff() <= tol.eq;
}

Bounds bounds(const LinearRelation& t, const Tolerances& tol) {
  if (!is_symmetric(t, tol)) {
    throw PreconditionError("bounds: relation is not symmetric");
  }
  const OperatorPart op = operator_part(t, tol);
  if (op.h.rows() == 0) return {kInf, -kInf, false};
  const Eigen::VectorXd ev = detail::hermitian_eigenvalues(op.h);
  return {ev(0), ev(ev.size() - 1), true};
}

double relation_norm(const LinearRelation& t, const Tolerances& tol) {
  if (t.dim() == 0) return 0.0;
  const detail::ThinSvd dec = detail::svd(t.first(), tol);
  if (dec.rank < t.dim()) return kInf;
  const Eigen::VectorXd inv_s = dec.s.cwiseInverse();
  return detail::spectral_norm(t.second() * dec.v * inv_s.asDiagonal());
}

double resolvent_norm(const LinearRelation& t, Complex zeta,
                      const Tolerances& tol) {
  const Index n = t.space_dim();
  const LinearRelation shifted =
      add(t, scale(-zeta, LinearRelation::identity(n), tol), tol);
  return relation_norm(inverse(shifted), tol);
}

ClassificationReport classify(const LinearRelation& t, const Tolerances& tol) {
  ClassificationReport rep;
  rep.symmetric = is_symmetric(t, tol);
  rep.selfadjoint = rep.symmetric && is_selfadjoint(t, tol);
  rep.positive = rep.symmetric && is_positive(t, tol);
  rep.quasi_null = rep.positive && is_quasi_null(t, tol);
  rep.contraction = is_contraction(t, tol);
  rep.isometry = rep.contraction && is_isometry(t, tol);
  if (rep.symmetric) {
    const Bounds b = bounds(t, tol);
    rep.has_bounds = b.defined;
    rep.lower_bound = b.lower;
    rep.upper_bound = b.upper;
  }
  rep.norm = relation_norm(t, tol);
  return rep;
}

int SpectrumReport::multiplicity_near(Complex z, double radius) const {
  int total = 0;
  for (const Eigenvalue& e : eigenvalues) {
    if (std::abs(e.value - z) <= radius) total += e.multiplicity;
  }
  return total;
}

int eigen_multiplicity(const LinearRelation& t, Complex zeta,
                       const Tolerances& tol) {
  if (t.dim() == 0) return 0;
  const Matrix m = (t.second() - zeta * t.first()) / (1.0 + std::abs(zeta));
  Eigen::BDCSVD<Matrix> dec(m);
  const Eigen::VectorXd s = dec.singularValues();
  Index above = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol.cluster) ++above;
  }
  return static_cast<int>(t.dim() - above);
}

SpectrumReport point_spectrum(const LinearRelation& t, const Tolerances& tol) {
  SpectrumReport rep;
  if (t.dim() > 0) {
    rep = is_selfadjoint(t, tol) ? selfadjoint_spectrum(t, tol)
                                 : general_spectrum(t, tol);
  }
  rep.note =
      "finite dimension: continuous spectrum and eigenvalues of infinite "
      "multiplicity are empty";
  return rep;
}

SpectrumReport full_spectrum(const LinearRelation& t, const Tolerances& tol) {
  SpectrumReport rep = point_spectrum(t, tol);
  rep.full_computed = true;
  // ran(T - ζI) has dimension dim T - dim ker(T - ζI), so it is all of C^n
  // off the point spectrum exactly when dim T = n.
  if (t.dim() != t.space_dim() ||
      rep.point_shape == SpectrumShape::kWholePlane) {
    rep.full_shape = SpectrumShape::kWholePlane;
  }
  return rep;
}

}  // namespace linrel
