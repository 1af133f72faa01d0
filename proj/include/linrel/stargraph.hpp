#pragma once

#include "linrel/classify.hpp"

#include <vector>

namespace linrel {

/// Finite truncation of the directed, weighted star graph: hub δ_0 (coordinate
/// 0) and N leaves δ_1..δ_N with nonzero real weights. The unweighted star is
/// the all-ones weight vector.
///
/// The untruncated unweighted star operator is neither bounded nor closable;
/// a truncation is closed and bounded, so that behaviour is not represented.
class StarConfig {
 public:
  explicit StarConfig(std::vector<double> weights);
  static StarConfig unweighted(int leaves);

  int leaves() const { return static_cast<int>(weights_.size()); }
  Index space_dim() const { return leaves() + 1; }
  const std::vector<double>& weights() const { return weights_; }

  /// w as a vector of C^{N+1} (zero hub entry).
  Vector weight_vector() const;
  double weight_norm_squared() const;

 private:
  std::vector<double> weights_;
};

/// A = {(f, <w, f> δ_0) : f ⊥ δ_0}.
LinearRelation build_star(const StarConfig& cfg, const Tolerances& tol = {});

/// Zero operator on span{δ_1..δ_N} plus span{(0, δ_0)}: the closure of the
/// unweighted star, and the unique positive selfadjoint extension of A.
LinearRelation star_closure_relation(const StarConfig& cfg,
                                     const Tolerances& tol = {});

/// Closed form of A*: {(h, <δ_0, h> w)} ⊕ span{(0, δ_0)}. Verified against
/// the generic adjoint; a mismatch throws ConsistencyError.
LinearRelation star_adjoint(const StarConfig& cfg, const Tolerances& tol = {});

/// span{(δ_0 + w/ζ, ζδ_0 + w)}, checked against deficiency_space().
Subspace star_deficiency(const StarConfig& cfg, Complex zeta,
                         const Tolerances& tol = {});

/// S_β = A ⊕ span{(i(β+1)w + (β-1)δ_0, (β-1)w - i(β+1)δ_0)} for |β| = 1.
LinearRelation star_sa_family(const StarConfig& cfg, Complex beta,
                              const Tolerances& tol = {});

/// A_α = A ∔ span{(δ_0 + w/α, αδ_0 + w)} for real α != 0, with its spectrum:
/// nonzero eigenvalues α and -||w||^2/α, and 0 with multiplicity N - 1.
struct StarExtension {
  LinearRelation relation;
  SpectrumReport spectrum;
};
StarExtension star_extension_alpha(const StarConfig& cfg, double alpha,
                                   const Tolerances& tol = {});

}  // namespace linrel
