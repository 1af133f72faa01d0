#pragma once

#include "linrel/classify.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace linrel {

/// N_ζ(A*) = A* ∩ {(f, ζf)}, a subspace of C^{2n}.
Subspace deficiency_space(const LinearRelation& a, Complex zeta,
                          const Tolerances& tol = {});

/// Common dimension of N_ζ(A*) over `probes`.
///
/// A must be symmetric and every probe must be a quasi-regular point
/// (ζ not an eigenvalue of A); disagreeing dimensions throw
/// ConsistencyError.
int deficiency_index(const LinearRelation& a, std::span<const Complex> probes,
                     const Tolerances& tol = {});

/// S_α = A ∔ N_α(A*) for α < m_A (lower semi-bounded side) or α > M_A
/// (upper side). Throws PreconditionError for α in [m_A, M_A] or when the sum
/// is not direct.
LinearRelation extend_semibounded(const LinearRelation& a, double alpha,
                                  const Tolerances& tol = {});

enum class MapMode { kContraction, kIsometry };

/// A subspace D of a source deficiency space and a map V from D into a
/// target deficiency space.
///
/// `map` acts on coordinates: V(D.basis() c) = target_basis * (map c), where
/// target_basis is the canonical basis of the target space returned by
/// extension_target(). Norms are the Euclidean norm of C^{2n}.
struct ExtensionParams {
  LinearRelation base;
  Subspace source;
  Matrix map;
  MapMode mode = MapMode::kIsometry;
};

/// Which deficiency spaces an extension formula pairs up.
enum class ExtensionKind {
  kVonNeumann,        // D ⊆ N_i(A*),     V : D -> N_{-i}(A*)
  kPositiveQuasiNull  // D ⊆ N_1(-A*),    V : D -> N_{-1}(-A*)
};

Subspace extension_source(const LinearRelation& a, ExtensionKind kind,
                          const Tolerances& tol = {});
Subspace extension_target(const LinearRelation& a, ExtensionKind kind,
                          const Tolerances& tol = {});

/// (V - I)D as a relation.
LinearRelation map_minus_identity(const ExtensionParams& p, ExtensionKind kind,
                                  const Tolerances& tol = {});

/// S = A ⊕ (V - I)D with D ⊆ N_i(A*) and V an isometry into N_{-i}(A*).
LinearRelation symmetric_extension_vn(const ExtensionParams& p,
                                      const Tolerances& tol = {});

/// S = A ⊕ (V - I)D for quasi-null A, D ⊆ N_1(-A*), V a contraction
/// (positive S) or an isometry (quasi-null S) into N_{-1}(-A*).
///
/// Only pairs (D, V) whose S is symmetric are admissible; others throw
/// PreconditionError. Elements of D are (u, u) and V maps them to (p, -p).
LinearRelation positive_extension_qn(const ExtensionParams& p,
                                     const Tolerances& tol = {});

/// Result of splitting a symmetric extension S ⊇ A as S = A ⊕ L.
struct ExtensionChecks {
  bool l_in_adjoint = false;
  bool l_positive = false;
  /// Positivity of the joint form on A ⊕ L, equivalent to the pairwise
  /// condition <f,g> + <h,k> >= 2|a|, a ∈ {Re<f,k>, Im<f,k>}.
  bool joint_positive = false;
  int samples = 0;
  int sample_violations = 0;
  double worst_sample_slack = 0.0;
  /// Only meaningful when A is quasi-null: max |<f,k>|, |<g,h>| over basis
  /// pairs, and whether it is below tol.psd.
  bool base_quasi_null = false;
  double cross_inner_max = 0.0;
  bool cross_orthogonal = true;

  bool all_pass() const;
};

struct ExtensionDecomposition {
  LinearRelation remainder;  // L = S ⊖ A
  ExtensionChecks checks;
};

/// Requires A ⊆ S, both symmetric, A positive.
ExtensionDecomposition decompose_extension(const LinearRelation& s,
                                           const LinearRelation& a,
                                           int samples = 256,
                                           std::uint64_t seed = 0,
                                           const Tolerances& tol = {});

}  // namespace linrel
