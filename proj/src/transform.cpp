#include "linrel/transform.hpp"

#include <algorithm>
#include <cmath>

namespace linrel {

LinearRelation krein(const LinearRelation& t, const Tolerances& tol) {
  const Matrix f = t.first();
  const Matrix g = t.second();
  const double r = 1.0 / std::sqrt(2.0);
  return LinearRelation::from_pairs(r * (f + g), r * (f - g), tol);
}

LinearRelation krein_by_resolvent(const LinearRelation& t,
                                  const Tolerances& tol) {
  const Index n = t.space_dim();
  const LinearRelation id = LinearRelation::identity(n);
  const LinearRelation resolvent = inverse(add(t, id, tol));
  return add(scale(2.0, resolvent, tol), scale(-1.0, id, tol), tol);
}

double KreinComponents::max() const {
  return std::max({domain, range, kernel, multivalued});
}

KreinComponents krein_components_check(const LinearRelation& t,
                                       const Tolerances& tol) {
  const LinearRelation k = krein(t, tol);
  const RelationParts kp = parts(k, tol);
  const LinearRelation plus = shift(t, -1.0, tol);   // T + I
  const LinearRelation minus = shift(t, 1.0, tol);   // T - I
  KreinComponents out;
  out.domain = kp.dom.distance(range(plus, tol));
  out.range = kp.ran.distance(range(minus, tol));
  out.kernel = kp.ker.distance(kernel(minus, tol));
  out.multivalued = kp.mul.distance(kernel(plus, tol));
  return out;
}

}  // namespace linrel
