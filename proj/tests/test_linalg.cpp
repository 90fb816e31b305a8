#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tracewitness/rng.hpp"

using namespace tracewitness;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const Eigen::Index n = rows.size();
  Matrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("hermitize keeps an already-Hermitian matrix") {
  const Matrix m =
      from_rows({{2.0, Complex(1, 1)}, {Complex(1, -1), 3.0}});
  const HermitianMatrix h = hermitize(m);
  CHECK((h.mat() - m).norm() == doctest::Approx(0.0));
}

TEST_CASE("hermitize averages near-Hermitian off-diagonals") {
  const Matrix m = from_rows({{1.0, Complex(0, 1e-12)}, {0.0, 1.0}});
  const HermitianMatrix h = hermitize(m);
  CHECK(h(0, 1) == Complex(0, 0.5e-12));
  CHECK(h(1, 0) == Complex(0, -0.5e-12));
  // exact Hermitian storage, idempotent
  CHECK((hermitize(h.mat()).mat() - h.mat()).norm() == 0.0);
}

TEST_CASE("hermitize rejects a genuinely asymmetric matrix") {
  const Matrix m = from_rows({{0.0, 1.0}, {0.0, 0.0}});
  CHECK_THROWS_AS(hermitize(m), AsymmetryError);
}

TEST_CASE("hermitize is idempotent on random input") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const HermitianMatrix h = gaussian_hermitian(rng, 4);
    const HermitianMatrix again = hermitize(h.mat());
    CHECK((again.mat() - h.mat()).norm() == 0.0);
  }
}

TEST_CASE("eig of diag(4,1) sorts ascending with permuted identity columns") {
  const EigenDecomposition es = eig_hermitian(HermitianMatrix::diagonal2(4, 1));
  CHECK(es.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(es.eigenvalues[1] == doctest::Approx(4.0));
  CHECK(std::abs(es.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(es.eigenvectors(0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("eig of the rank-one 2x2 all-ones matrix") {
  const EigenDecomposition es =
      eig_hermitian(hermitize(from_rows({{1.0, 1.0}, {1.0, 1.0}})));
  CHECK(es.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(es.eigenvalues[1] == doctest::Approx(2.0));
}

TEST_CASE("eigendecomposition reconstruction and trace invariants") {
  Rng rng(5);
  for (int n : {2, 3, 5, 8}) {
    const HermitianMatrix h = gaussian_hermitian(rng, n);
    const EigenDecomposition es = eig_hermitian(h);
    CHECK((es.reconstruct() - h.mat()).norm() <=
          1e-10 * (1.0 + h.mat().norm()));
    const Matrix vhv =
        es.eigenvectors.adjoint() * es.eigenvectors - Matrix::Identity(n, n);
    CHECK(vhv.norm() <= 1e-10);
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(es.eigenvalues[i] <= es.eigenvalues[i + 1]);
    }
    CHECK(es.eigenvalues.sum() ==
          doctest::Approx(trace(h)).epsilon(1e-10));
  }
}

TEST_CASE("eigenvalues are invariant under unitary conjugation") {
  Rng rng(17);
  const HermitianMatrix h = gaussian_hermitian(rng, 4);
  // Gaussian orthonormalization, same construction as the harness sampler.
  Matrix g = gaussian_matrix(rng, 4);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix u = qr.householderQ();
  const EigenDecomposition e1 = eig_hermitian(h);
  const EigenDecomposition e2 =
      eig_hermitian(hermitize(u.adjoint() * h.mat() * u));
  for (int i = 0; i < 4; ++i) {
    CHECK(e1.eigenvalues[i] ==
          doctest::Approx(e2.eigenvalues[i]).epsilon(1e-9));
  }
}

TEST_CASE("matrix sqrt of a diagonal matrix") {
  const HermitianMatrix r = matrix_sqrt(HermitianMatrix::diagonal2(4, 1));
  CHECK((r.mat() - HermitianMatrix::diagonal2(2, 1).mat()).norm() <= 1e-12);
}

TEST_CASE("matrix sqrt reproduces the closed-form X^{1/2} of the family") {
  for (double eps : {0.5, 0.1, 0.01}) {
    Matrix x(2, 2);
    x << 2 + 2 * eps + eps * eps, 2 + eps, 2 + eps, 2.0;
    x *= 0.25;
    Matrix x_sqrt(2, 2);
    x_sqrt << 1 + eps, 1.0, 1.0, 1.0;
    x_sqrt *= 0.5;
    const HermitianMatrix r = matrix_sqrt(hermitize(x));
    CHECK((r.mat() - x_sqrt).norm() <= 1e-10 * (1.0 + x_sqrt.norm()));
    CHECK((r.mat() * r.mat() - x).norm() <= 1e-8 * (1.0 + x.norm()));
  }
}

TEST_CASE("inv_sqrt refuses a numerically singular matrix") {
  CHECK_THROWS_AS(matrix_inv_sqrt(HermitianMatrix::diagonal2(1e-20, 1.0)),
                  DomainError);
}

TEST_CASE("sqrt refuses an indefinite matrix but clips boundary round-off") {
  CHECK_THROWS_AS(matrix_sqrt(HermitianMatrix::diagonal2(-1.0, 1.0)),
                  DomainError);
  // within -psd_tolerance: clipped to zero instead of an error
  const HermitianMatrix r = matrix_sqrt(HermitianMatrix::diagonal2(-1e-12, 1.0));
  CHECK(r(0, 0).real() == 0.0);
  CHECK(r(1, 1).real() == doctest::Approx(1.0));
}

TEST_CASE("sqrt then square round-trips; sqrt times inv_sqrt is identity") {
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    const Matrix g = gaussian_matrix(rng, 4);
    const HermitianMatrix h =
        hermitize(g * g.adjoint() + 1e-3 * Matrix::Identity(4, 4));
    const HermitianMatrix r = matrix_sqrt(h);
    CHECK((matrix_function(r, SpectralMap::square()).mat() - h.mat()).norm() <=
          1e-8 * (1.0 + h.mat().norm()));
    const HermitianMatrix ri = matrix_inv_sqrt(h);
    CHECK((r.mat() * ri.mat() - Matrix::Identity(4, 4)).norm() <=
          1e-8 * condition_number(h));
  }
}

TEST_CASE("matrix power matches sqrt for p = 1/2 and handles integer p") {
  Rng rng(29);
  const Matrix g = gaussian_matrix(rng, 3);
  const HermitianMatrix h =
      hermitize(g * g.adjoint() + 0.1 * Matrix::Identity(3, 3));
  CHECK((matrix_function(h, SpectralMap::power(0.5)).mat() -
         matrix_sqrt(h).mat())
            .norm() <= 1e-12 * (1.0 + h.mat().norm()));
  CHECK((matrix_function(h, SpectralMap::power(2.0)).mat() -
         h.mat() * h.mat())
            .norm() <= 1e-10 * (1.0 + h.mat().norm()));
}

TEST_CASE("classify_definiteness on the three canonical cases") {
  const DefinitenessClass pd = classify_definiteness(HermitianMatrix::identity(3));
  CHECK(pd.tag == Definiteness::PositiveDefinite);
  CHECK(pd.min_eigenvalue == doctest::Approx(1.0));

  const DefinitenessClass psd =
      classify_definiteness(hermitize(from_rows({{1.0, 1.0}, {1.0, 1.0}})));
  CHECK(psd.tag == Definiteness::PositiveSemidefinite);
  CHECK(psd.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("classify_definiteness flags the projected-out direction matrix") {
  // D - beta z z* with D = diag(2,1), z at pi/4, beta = z*Dz = 1.5.
  // 2x2 characteristic-polynomial oracle: eigenvalues of [[1.25, -0.75],
  // [-0.75, 0.25]] are (1.5 +- sqrt(3.25)) / 2; the minus root is negative.
  const double beta = 1.5;
  Matrix m(2, 2);
  m << 2.0 - beta * 0.5, -beta * 0.5, -beta * 0.5, 1.0 - beta * 0.5;
  const double tr = m(0, 0).real() + m(1, 1).real();
  const double det =
      (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  const double expected_min = 0.5 * (tr - std::sqrt(tr * tr - 4.0 * det));
  CHECK(expected_min < 0.0);

  const DefinitenessClass cls = classify_definiteness(hermitize(m));
  CHECK(cls.tag == Definiteness::Indefinite);
  CHECK(cls.min_eigenvalue == doctest::Approx(expected_min).epsilon(1e-12));
}

TEST_CASE("trace and Hilbert-Schmidt inner product basics") {
  CHECK(trace(HermitianMatrix::diagonal2(2, 1)) == doctest::Approx(3.0));
  const Matrix off = from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(std::abs(hs_inner(Matrix::Identity(2, 2), off)) <= 1e-15);
}

TEST_CASE("Cauchy-Schwarz in the Hilbert-Schmidt inner product") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const Matrix g1 = gaussian_matrix(rng, 3);
    const Matrix g2 = gaussian_matrix(rng, 3);
    const HermitianMatrix a =
        hermitize(g1 * g1.adjoint() + 1e-3 * Matrix::Identity(3, 3));
    const HermitianMatrix x =
        hermitize(g2 * g2.adjoint() + 1e-3 * Matrix::Identity(3, 3));
    const Matrix a_sqrt = matrix_sqrt(a).mat();
    const Matrix xa_sqrt = x.mat() * a_sqrt;
    const double lhs = std::abs(hs_inner(a_sqrt, xa_sqrt));
    const double rhs = frobenius_norm(a_sqrt) * frobenius_norm(xa_sqrt);
    CHECK(lhs <= rhs + 1e-9 * (1.0 + rhs));
  }
}

TEST_CASE("shape mismatches raise DimensionMismatch") {
  const Matrix a = Matrix::Identity(2, 2);
  const Matrix b = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(mat_mul(a, b), DimensionMismatch);
  CHECK_THROWS_AS(mat_add(a, b), DimensionMismatch);
  CHECK_THROWS_AS(hs_inner(a, b), DimensionMismatch);
  CHECK_THROWS_AS(hermitize(Matrix::Ones(2, 3)), DimensionMismatch);
}
