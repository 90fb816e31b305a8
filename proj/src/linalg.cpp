#include "tracewitness/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace tracewitness {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream os;
    os << who << ": expected a square matrix, got " << m.rows() << "x"
       << m.cols();
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(const Matrix& m) {
  require_square(m, "HermitianMatrix");
  const double defect = (m - m.adjoint()).norm();
  if (defect > 1e-8 * (1.0 + m.norm())) {
    std::ostringstream os;
    os << "hermitize: anti-Hermitian defect " << defect
       << " exceeds 1e-8 * (1 + ||M||_F) = " << 1e-8 * (1.0 + m.norm());
    throw AsymmetryError(os.str());
  }
  m_ = 0.5 * (m + m.adjoint().eval());
}

HermitianMatrix HermitianMatrix::identity(int n) {
  return HermitianMatrix(Matrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(int n) {
  return HermitianMatrix(Matrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(const RVector& d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::diagonal2(double a, double b) {
  RVector d(2);
  d << a, b;
  return diagonal(d);
}

HermitianMatrix hermitize(const Matrix& m) { return HermitianMatrix(m); }

Matrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
         eigenvectors.adjoint();
}

EigenDecomposition eig_hermitian(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.mat());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError(
        "eig_hermitian: eigensolver failed to converge; rescale the input");
  }
  // Eigen returns eigenvalues sorted ascending already.
  return {solver.eigenvalues(), solver.eigenvectors()};
}

DefinitenessClass classify_definiteness(const HermitianMatrix& h) {
  const EigenDecomposition es = eig_hermitian(h);
  const double lo = es.eigenvalues[0];
  const double hi = es.eigenvalues[es.eigenvalues.size() - 1];
  const double max_abs = std::max(std::abs(lo), std::abs(hi));
  if (lo > pd_tolerance(max_abs)) {
    return {Definiteness::PositiveDefinite, lo};
  }
  if (lo > -psd_tolerance(max_abs)) {
    return {Definiteness::PositiveSemidefinite, lo};
  }
  return {Definiteness::Indefinite, lo};
}

namespace {

bool is_integral(double p) { return p == std::floor(p); }

}  // namespace

HermitianMatrix matrix_function(const HermitianMatrix& h, SpectralMap f) {
  EigenDecomposition es = eig_hermitian(h);
  const int n = h.dim();
  const double max_abs =
      std::max(std::abs(es.eigenvalues[0]), std::abs(es.eigenvalues[n - 1]));
  const double pd_tol = pd_tolerance(max_abs);
  const double psd_tol = psd_tolerance(max_abs);

  const bool needs_psd =
      f.kind == SpectralMap::Kind::Sqrt ||
      (f.kind == SpectralMap::Kind::Power && f.exponent >= 0.0 &&
       !is_integral(f.exponent));
  const bool needs_pd =
      f.kind == SpectralMap::Kind::InvSqrt ||
      (f.kind == SpectralMap::Kind::Power && f.exponent < 0.0);

  RVector mapped(n);
  for (int i = 0; i < n; ++i) {
    double lam = es.eigenvalues[i];
    if (needs_pd && lam < pd_tol) {
      std::ostringstream os;
      os << "matrix_function: eigenvalue " << lam
         << " below pd_tolerance " << pd_tol << " under an inverse map";
      throw DomainError(os.str());
    }
    if (needs_psd) {
      if (lam < -psd_tol) {
        std::ostringstream os;
        os << "matrix_function: eigenvalue " << lam
           << " below -psd_tolerance " << -psd_tol << " under a root map";
        throw DomainError(os.str());
      }
      if (lam < 0.0) lam = 0.0;  // boundary clip for epsilon->0 limits
    }
    switch (f.kind) {
      case SpectralMap::Kind::Sqrt:
        mapped[i] = std::sqrt(lam);
        break;
      case SpectralMap::Kind::InvSqrt:
        mapped[i] = 1.0 / std::sqrt(lam);
        break;
      case SpectralMap::Kind::Square:
        mapped[i] = lam * lam;
        break;
      case SpectralMap::Kind::Power:
        mapped[i] = std::pow(lam, f.exponent);
        break;
    }
  }
  Matrix result = es.eigenvectors *
                  mapped.asDiagonal().toDenseMatrix().cast<Complex>() *
                  es.eigenvectors.adjoint();
  return HermitianMatrix(result);
}

double trace(const HermitianMatrix& h) {
  const Complex t = h.mat().trace();
  if (std::abs(t.imag()) > 1e-10 * (1.0 + h.mat().norm())) {
    throw Error("trace: Hermitian matrix produced a non-real trace");
  }
  return t.real();
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("hs_inner: shape mismatch");
  }
  return (a.adjoint() * b).trace();
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: inner dimensions disagree");
  }
  return a * b;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("mat_add: shape mismatch");
  }
  return a + b;
}

Matrix scalar_mul(Complex c, const Matrix& m) { return c * m; }

Matrix conj_transpose(const Matrix& m) { return m.adjoint(); }

double condition_number(const HermitianMatrix& h) {
  const EigenDecomposition es = eig_hermitian(h);
  const double lo = es.eigenvalues[0];
  const double hi = es.eigenvalues[es.eigenvalues.size() - 1];
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

Matrix rank_one_projector(const CVector& u) {
  const double norm = u.norm();
  if (norm == 0.0) throw InvalidConfig("rank_one_projector: zero vector");
  const CVector w = u / norm;
  return w * w.adjoint();
}

}  // namespace tracewitness
