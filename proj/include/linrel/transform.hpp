#pragma once

#include "linrel/relation.hpp"

namespace linrel {

/// Krein transform K(T) = 2(T + I)^{-1} - I = {(f + g, f - g) : (f, g) ∈ T}.
///
/// Applied as the pair map on the carrier basis. The map divided by sqrt(2)
/// is unitary on C^{2n}, so the transformed basis is orthonormal as is and
/// K(K(T)) = T up to roundoff.
LinearRelation krein(const LinearRelation& t, const Tolerances& tol = {});

/// The same transform evaluated literally as 2(T + I)^{-1} - I through
/// add, inverse and scale. Used as an independent cross-check.
LinearRelation krein_by_resolvent(const LinearRelation& t,
                                  const Tolerances& tol = {});

/// Projector distances for the component identities of the transform:
/// dom K(T) = ran(T + I), ran K(T) = ran(T - I), ker K(T) = ker(T - I),
/// mul K(T) = ker(T + I).
struct KreinComponents {
  double domain = 0.0;
  double range = 0.0;
  double kernel = 0.0;
  double multivalued = 0.0;

  double max() const;
  bool holds(const Tolerances& tol = {}) const { return max() < tol.eq; }
};

KreinComponents krein_components_check(const LinearRelation& t,
                                       const Tolerances& tol = {});

}  // namespace linrel
