#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tracewitness/functionals.hpp"
#include "tracewitness/rng.hpp"

using namespace tracewitness;

TEST_CASE("apply evaluates Tr(SX)") {
  const TraceFunctional phi(HermitianMatrix::diagonal2(1, 2));
  CHECK(apply(phi, HermitianMatrix::diagonal2(2, 1)) == doctest::Approx(4.0));

  const TraceFunctional tr(HermitianMatrix::identity(3));
  Rng rng(2);
  const HermitianMatrix x = gaussian_hermitian(rng, 3);
  CHECK(apply(tr, x) == doctest::Approx(trace(x)));
}

TEST_CASE("apply on a rank-one projection is the Born value 1+(s-1)cos^2") {
  const double s = 3.5;
  const TraceFunctional phi(HermitianMatrix::diagonal2(s, 1));
  for (double theta : {0.0, 0.3, 1.0, 1.5}) {
    CVector u(2);
    u << std::cos(theta), std::sin(theta);
    const double got = apply(phi, hermitize(rank_one_projector(u)));
    const double expected = 1.0 + (s - 1.0) * std::cos(theta) * std::cos(theta);
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("apply rejects dimension mismatches; functional gate rejects indefinite S") {
  const TraceFunctional phi(HermitianMatrix::identity(2));
  CHECK_THROWS_AS(apply(phi, HermitianMatrix::identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(TraceFunctional(HermitianMatrix::diagonal2(1, -1)),
                  NotPSDError);
}

TEST_CASE("commutator defect vanishes exactly for scalar S") {
  const TraceFunctional phi(hermitize(2.5 * Matrix::Identity(3, 3)));
  CHECK(commutator_defect(phi, 100, 7) <= 1e-12);
}

TEST_CASE("commutator defect is macroscopic for a non-scalar S") {
  const TraceFunctional phi(HermitianMatrix::diagonal2(1, 2));
  CHECK(commutator_defect(phi, 100, 7) > 1e-3);
}

TEST_CASE("defect samplers validate their sample count") {
  const TraceFunctional phi(HermitianMatrix::identity(2));
  CHECK_THROWS_AS(commutator_defect(phi, 0, 1), InvalidConfig);
  CHECK_THROWS_AS(rank_one_spread(phi, 0, 1), InvalidConfig);
}

TEST_CASE("rank-one spread: zero for scalars, approaches the spectral gap") {
  const TraceFunctional scalar(hermitize(1.5 * Matrix::Identity(4, 4)));
  CHECK(rank_one_spread(scalar, 200, 11) <= 1e-12);

  // phi(|w><w|) = <w, S w> ranges over [lambda_min, lambda_max] = [1, 2]
  const TraceFunctional phi(HermitianMatrix::diagonal2(1, 2));
  const double spread = rank_one_spread(phi, 2000, 11);
  CHECK(spread > 0.9);
  CHECK(spread <= 1.0 + 1e-12);
}

TEST_CASE("classify_traciality on scalar, non-scalar, and near-scalar S") {
  const TracialityVerdict scalar =
      classify_traciality(TraceFunctional(hermitize(3.0 * Matrix::Identity(4, 4))),
                          1e-10, 100, 5);
  CHECK(scalar.is_scalar);
  CHECK(scalar.scalar_c == doctest::Approx(3.0));
  CHECK(scalar.commutator_defect <= 1e-12);
  CHECK(scalar.rank_one_spread <= 1e-12);

  const TracialityVerdict skew = classify_traciality(
      TraceFunctional(HermitianMatrix::diagonal2(1, 2)), 1e-10, 100, 5);
  CHECK_FALSE(skew.is_scalar);
  CHECK(skew.commutator_defect > 1e-3);
  CHECK(skew.rank_one_spread > 1e-3);

  const TracialityVerdict near = classify_traciality(
      TraceFunctional(HermitianMatrix::diagonal2(1.0 + 1e-14, 1.0)), 1e-10, 10,
      5);
  CHECK(near.is_scalar);
}

TEST_CASE("traciality equivalence: spectral verdict matches both defects") {
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    const bool make_scalar = (i % 2 == 0);
    HermitianMatrix s = [&] {
      if (make_scalar) {
        return hermitize((0.5 + rng.next_unit()) * Matrix::Identity(3, 3));
      }
      const Matrix g = gaussian_matrix(rng, 3);
      return hermitize(g * g.adjoint() + 1e-3 * Matrix::Identity(3, 3));
    }();
    const TracialityVerdict v =
        classify_traciality(TraceFunctional(s), 1e-10, 100, rng.next_u64());
    const bool defects_small =
        v.commutator_defect < 1e-9 && v.rank_one_spread < 1e-9;
    CHECK(v.is_scalar == defects_small);
  }
}

TEST_CASE("normalize rescales to a target trace") {
  const TraceFunctional phi(HermitianMatrix::diagonal2(3, 1));
  const TraceFunctional state = normalize(phi, 1.0);
  CHECK(trace(state.density()) == doctest::Approx(1.0));
  const TraceFunctional trace_n = normalize(phi, 2.0);
  CHECK(trace(trace_n.density()) == doctest::Approx(2.0));
  CHECK(trace_n.density()(0, 0).real() == doctest::Approx(1.5));
  CHECK_THROWS_AS(normalize(TraceFunctional(HermitianMatrix::zero(2)), 1.0),
                  InvalidFunctional);
  CHECK_THROWS_AS(normalize(phi, -1.0), InvalidConfig);
}

TEST_CASE("Kadison inequality holds for sampled states") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const Matrix g = gaussian_matrix(rng, 3);
    const HermitianMatrix s0 =
        hermitize(g * g.adjoint() + 1e-3 * Matrix::Identity(3, 3));
    const TraceFunctional state =
        normalize(TraceFunctional(s0), 1.0);
    const HermitianMatrix a = gaussian_hermitian(rng, 3);
    const double pa = apply(state, a);
    const double pa2 = apply(state, hermitize(a.mat() * a.mat()));
    CHECK(pa * pa <= pa2 + 1e-9);
  }
}

TEST_CASE("positivity: PSD functional on PSD argument is nonnegative") {
  Rng rng(19);
  for (int i = 0; i < 20; ++i) {
    const Matrix g1 = gaussian_matrix(rng, 3);
    const Matrix g2 = gaussian_matrix(rng, 3);
    const TraceFunctional phi(hermitize(g1 * g1.adjoint()));
    const HermitianMatrix x = hermitize(g2 * g2.adjoint());
    const double scale = 1.0 + phi.density().mat().norm() * x.mat().norm();
    CHECK(apply(phi, x) >= -1e-10 * scale);
  }
}
