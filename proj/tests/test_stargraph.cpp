#include "support.hpp"

#include "linrel/extend.hpp"
#include "linrel/stargraph.hpp"

#include <doctest.h>

using namespace linrel;
using testsupport::Rng;

namespace {

Vector unit(Index n, Index i) { return Vector::Unit(n, i); }

Matrix col(const Vector& f, const Vector& g) {
  Matrix m(f.size() + g.size(), 1);
  m << f, g;
  return m;
}

}  // namespace

TEST_SUITE("stargraph") {

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(StarConfig({1.0}), PreconditionError);
  CHECK_THROWS_AS(StarConfig({1.0, 0.0}), PreconditionError);
  CHECK_THROWS_AS(StarConfig({1.0, std::nan("")}), PreconditionError);
  const StarConfig cfg = StarConfig::unweighted(3);
  CHECK(cfg.space_dim() == 4);
  CHECK(cfg.weight_norm_squared() == 3.0);
}

TEST_CASE("build_star") {
  const LinearRelation a = build_star(StarConfig::unweighted(2));
  Matrix f = Matrix::Zero(3, 2), g = Matrix::Zero(3, 2);
  f(1, 0) = 1;
  f(2, 1) = 1;
  g(0, 0) = 1;
  g(0, 1) = 1;
  CHECK(a.equals(LinearRelation::from_pairs(f, g)));
  const StarConfig w123({1.0, 2.0, 3.0});
  CHECK(kernel(build_star(w123)).dim() == 2);
  Rng r(51);
  for (int leaves = 2; leaves <= 8; ++leaves) {
    CHECK(is_quasi_null(build_star(testsupport::random_star(r, leaves))));
  }
}

TEST_CASE("closure relation") {
  for (int leaves = 2; leaves <= 6; ++leaves) {
    const StarConfig cfg = StarConfig::unweighted(leaves);
    const LinearRelation c = star_closure_relation(cfg);
    CHECK(is_selfadjoint(c));
    CHECK(is_quasi_null(c));
    CHECK(multivalued_part(c).equals(Subspace::span(Matrix(unit(cfg.space_dim(), 0)))));
    const SpectrumReport s = full_spectrum(c);
    REQUIRE(s.eigenvalues.size() == 1);
    CHECK(std::abs(s.eigenvalues[0].value) < 1e-10);
    CHECK(s.eigenvalues[0].multiplicity == leaves);
  }
}

TEST_CASE("adjoint closed form") {
  Rng r(53);
  for (int leaves = 2; leaves <= 8; ++leaves) {
    const StarConfig cfg = testsupport::random_star(r, leaves);
    const LinearRelation a = star_adjoint(cfg);
    CHECK(a.dim() == leaves + 2);
    CHECK(testsupport::projector_distance(a.carrier().basis(),
                                          testsupport::adjoint_oracle(build_star(cfg))) < 1e-8);
    CHECK(multivalued_part(a).equals(Subspace::span(Matrix(unit(cfg.space_dim(), 0)))));
  }
}

TEST_CASE("deficiency") {
  const StarConfig cfg = StarConfig::unweighted(2);
  const Vector p = unit(3, 0) + cfg.weight_vector();
  CHECK(star_deficiency(cfg, 1.0).equals(Subspace::span(col(p, p))));
  CHECK_THROWS_AS(star_deficiency(cfg, 0.0), PreconditionError);
  Rng r(57);
  for (int trial = 0; trial < 20; ++trial) {
    const StarConfig c = testsupport::random_star(r, r.integer(2, 8));
    const double t = r.uniform(0, 2 * M_PI);
    const Complex z(std::cos(t), std::sin(t));
    CHECK(star_deficiency(c, z).dim() == 1);
    const std::array<Complex, 3> probes{Complex(-1.0), Complex(0, 1), Complex(0, -1)};
    CHECK(deficiency_index(build_star(c), probes) == 1);
  }
}

TEST_CASE("selfadjoint family") {
  const StarConfig cfg({1.0, -1.5, 2.0});
  CHECK(star_sa_family(cfg, 1.0).equals(star_closure_relation(cfg)));
  CHECK(is_quasi_null(star_sa_family(cfg, 1.0)));
  CHECK(is_selfadjoint(star_sa_family(cfg, -1.0)));
  CHECK_THROWS_AS(star_sa_family(cfg, 2.0), PreconditionError);
  Rng r(59);
  for (int trial = 0; trial < 30; ++trial) {
    const double t = r.uniform(0.05, 2 * M_PI - 0.05);
    const LinearRelation s = star_sa_family(cfg, Complex(std::cos(t), std::sin(t)));
    CHECK(is_selfadjoint(s));
    CHECK_FALSE(is_positive(s));
  }
}

TEST_CASE("alpha extensions") {
  {
    const StarConfig cfg = StarConfig::unweighted(3);
    const StarExtension e = star_extension_alpha(cfg, -1.0);
    CHECK(e.spectrum.multiplicity_near(-1.0, 1e-8) == 1);
    CHECK(e.spectrum.multiplicity_near(3.0, 1e-8) == 1);
    CHECK(e.spectrum.multiplicity_near(0.0, 1e-8) == 2);
  }
  {
    const StarConfig cfg({3.0, 4.0});
    const StarExtension e = star_extension_alpha(cfg, 5.0);
    CHECK(e.spectrum.multiplicity_near(5.0, 1e-8) == 1);
    CHECK(e.spectrum.multiplicity_near(-5.0, 1e-8) == 1);
  }
  CHECK_THROWS_AS(star_extension_alpha(StarConfig::unweighted(2), 0.0), PreconditionError);
}

TEST_CASE("property: A_alpha equals the dense operator and has the stated eigenvector") {
  Rng r(61);
  for (int trial = 0; trial < 40; ++trial) {
    const StarConfig cfg = testsupport::random_star(r, r.integer(2, 8));
    const double alpha = r.uniform(0.2, 4.0) * (r.uniform(0, 1) < 0.5 ? -1 : 1);
    const StarExtension e = star_extension_alpha(cfg, alpha);
    const Matrix m = testsupport::star_alpha_matrix(cfg, alpha);
    CHECK(e.relation.equals(LinearRelation::graph(m)));
    const double s = cfg.weight_norm_squared();
    const Vector u = unit(cfg.space_dim(), 0) - alpha * cfg.weight_vector() / s;
    CHECK((m * u + (s / alpha) * u).norm() < 1e-10 * u.norm());
  }
}

}  // TEST_SUITE
