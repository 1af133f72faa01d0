#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace linrel {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Numerical thresholds shared by every operation.
///
/// `rank` is relative to the largest singular value of the matrix being
/// factored. `eq` bounds projector distances (Frobenius). `psd` bounds the
/// negative part of Hermitian forms, scaled as documented per predicate.
/// `orth` bounds the Gram-matrix deviation of an orthonormal basis.
/// `cluster` merges computed eigenvalues.
struct Tolerances {
  double rank = 1e-10;
  double eq = 1e-8;
  double psd = 1e-9;
  double orth = 1e-10;
  double cluster = 1e-7;
};

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or ambient dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation is violated by the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two computational routes that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace linrel
