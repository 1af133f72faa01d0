#pragma once

#include "linrel/relation.hpp"

#include <string>
#include <vector>

namespace linrel {

// Predicates work on the coordinate form of an orthonormal carrier basis
// [F; G]: <f, g> over the relation is c^H (F^H G) c. Since F^H F + G^H G = I,
// every form below is bounded by one and `scale` = ||F|| ||G|| measures the
// size of the roundoff in F^H G.

bool is_symmetric(const LinearRelation& t, const Tolerances& tol = {});

/// T = T*. Checked both as carrier equality with the adjoint and as
/// "symmetric with dim = n"; a clear disagreement throws ConsistencyError.
bool is_selfadjoint(const LinearRelation& t, const Tolerances& tol = {});

/// <f, g> >= 0 on T.
bool is_positive(const LinearRelation& t, const Tolerances& tol = {});
/// <f, g> = 0 on T.
bool is_quasi_null(const LinearRelation& t, const Tolerances& tol = {});
/// ||g|| <= ||f|| on T.
bool is_contraction(const LinearRelation& t, const Tolerances& tol = {});
/// ||g|| = ||f|| on T.
bool is_isometry(const LinearRelation& t, const Tolerances& tol = {});

/// Optimal bounds m <= <f,g>/||f||^2 <= M over pairs with f != 0.
///
/// When dom T = {0} the infimum and supremum run over the empty set and are
/// reported as lower = +inf, upper = -inf with `defined` = false.
struct Bounds {
  double lower;
  double upper;
  bool defined;
};

/// Requires a symmetric relation (PreconditionError otherwise).
Bounds bounds(const LinearRelation& t, const Tolerances& tol = {});

/// sup ||g|| / ||f||; +inf when mul T != {0}, 0 for the zero relation.
double relation_norm(const LinearRelation& t, const Tolerances& tol = {});

/// relation_norm((T - ζI)^{-1}); +inf when ζ is an eigenvalue.
double resolvent_norm(const LinearRelation& t, Complex zeta,
                      const Tolerances& tol = {});

struct ClassificationReport {
  bool symmetric = false;
  bool selfadjoint = false;
  bool positive = false;
  bool quasi_null = false;
  bool contraction = false;
  bool isometry = false;
  bool has_bounds = false;  // false when not symmetric or dom T = {0}
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double norm = 0.0;
};

ClassificationReport classify(const LinearRelation& t,
                              const Tolerances& tol = {});

struct Eigenvalue {
  Complex value;
  int multiplicity;
};

/// Either a finite list of points or the whole complex plane.
enum class SpectrumShape { kFinite, kWholePlane };

/// Spectral data of a relation at finite dimension.
///
/// The continuous spectrum and the set of eigenvalues of infinite
/// multiplicity are always empty here; the report carries that as a note
/// instead of computing them.
struct SpectrumReport {
  std::vector<Eigenvalue> eigenvalues;  // point spectrum when finite
  SpectrumShape point_shape = SpectrumShape::kFinite;
  bool full_computed = false;
  SpectrumShape full_shape = SpectrumShape::kFinite;
  std::vector<Complex> extra_points;  // in σ but not σ_p; empty at finite dim
  std::string note;

  /// Sum of multiplicities of eigenvalues within `radius` of z.
  int multiplicity_near(Complex z, double radius) const;
};

SpectrumReport point_spectrum(const LinearRelation& t,
                              const Tolerances& tol = {});
SpectrumReport full_spectrum(const LinearRelation& t,
                             const Tolerances& tol = {});

/// dim ker(T - ζI).
int eigen_multiplicity(const LinearRelation& t, Complex zeta,
                       const Tolerances& tol = {});

}  // namespace linrel
