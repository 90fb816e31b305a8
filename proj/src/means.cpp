#include "tracewitness/means.hpp"

#include <cmath>
#include <sstream>

namespace tracewitness {

namespace {

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b,
                      const char* who) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << who << ": dimension mismatch " << a.dim() << " vs " << b.dim();
    throw DimensionMismatch(os.str());
  }
}

// PD check plus the condition cap for means that invert an argument. A
// strictly positive spectrum that still fails the relative PD tolerance is
// an ill-conditioning problem, not a definiteness one, and is reported as
// such when the cap applies.
void require_pd(const HermitianMatrix& h, const char* who, bool capped) {
  const EigenDecomposition es = eig_hermitian(h);
  const int n = h.dim();
  const double lo = es.eigenvalues[0];
  const double hi = es.eigenvalues[n - 1];
  const double max_abs = std::max(std::abs(lo), std::abs(hi));
  if (lo > pd_tolerance(max_abs)) {
    if (capped && hi / lo > kConditionCap) {
      std::ostringstream os;
      os << who << ": condition number " << hi / lo << " exceeds cap "
         << kConditionCap;
      throw ConditionError(os.str());
    }
    return;
  }
  if (capped && lo > 0.0 && hi / lo > kConditionCap) {
    std::ostringstream os;
    os << who << ": condition number " << hi / lo << " exceeds cap "
       << kConditionCap;
    throw ConditionError(os.str());
  }
  std::ostringstream os;
  os << who << ": input is not positive definite (min eigenvalue " << lo
     << ")";
  throw NotPDError(os.str());
}

void require_psd(const HermitianMatrix& h, const char* who) {
  if (classify_definiteness(h).tag == Definiteness::Indefinite) {
    throw NotPSDError(std::string(who) + ": input is not positive semidefinite");
  }
}

// Factor F with B = F F*. Cholesky keeps the small columns of a graded PD
// matrix at full relative accuracy; the eigen route with clipping covers
// the PSD boundary where Cholesky breaks down.
Matrix psd_factor(const HermitianMatrix& b) {
  Eigen::LLT<Matrix> llt(b.mat());
  if (llt.info() == Eigen::Success) {
    return llt.matrixL();
  }
  const EigenDecomposition es = eig_hermitian(b);
  RVector roots(es.eigenvalues.size());
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    roots[i] = std::sqrt(std::max(0.0, es.eigenvalues[i]));
  }
  return es.eigenvectors * roots.asDiagonal().toDenseMatrix().cast<Complex>();
}

// (C C*)^{1/2} through the SVD of C. The singular values ARE the square
// roots, so tiny eigenvalues of C C* are never formed and then re-rooted,
// which would cost half the digits exactly where the epsilon-families of
// the witness constructions live.
HermitianMatrix sqrt_of_gram(const Matrix& c) {
  Eigen::JacobiSVD<Matrix> svd(c, Eigen::ComputeFullU);
  const Matrix u = svd.matrixU();
  return hermitize(
      u * svd.singularValues().asDiagonal().toDenseMatrix().cast<Complex>() *
      u.adjoint());
}

}  // namespace

DensityMatrix::DensityMatrix(const HermitianMatrix& m) : m_(m) {
  if (classify_definiteness(m).tag == Definiteness::Indefinite) {
    throw NotDensityError("DensityMatrix: not positive semidefinite");
  }
  const double t = trace(m);
  if (std::abs(t - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << t << " differs from 1 by more than 1e-10";
    throw NotDensityError(os.str());
  }
}

HermitianMatrix arithmetic_mean(const HermitianMatrix& a,
                                const HermitianMatrix& b) {
  require_same_dim(a, b, "arithmetic_mean");
  require_pd(a, "arithmetic_mean", false);
  require_pd(b, "arithmetic_mean", false);
  return hermitize(0.5 * (a.mat() + b.mat()));
}

// The inverted argument of # and the natural mean must be strictly PD and
// decently conditioned (inv_sqrt amplifies its noise quadratically); the
// other argument only ever passes through a square root, so the PSD
// boundary is acceptable there and small negative round-off is clipped.
// The explicit epsilon-families drive that argument to within O(eps^5) of
// singular at epsilons the tests pin, which rules out a strict PD gate.
HermitianMatrix metric_geomean(const HermitianMatrix& a,
                               const HermitianMatrix& b) {
  require_same_dim(a, b, "metric_geomean");
  require_pd(a, "metric_geomean", true);
  require_psd(b, "metric_geomean");
  const HermitianMatrix a_sqrt = matrix_sqrt(a);
  const HermitianMatrix a_inv_sqrt = matrix_inv_sqrt(a);
  const HermitianMatrix mid = sqrt_of_gram(a_inv_sqrt.mat() * psd_factor(b));
  return hermitize(a_sqrt.mat() * mid.mat() * a_sqrt.mat());
}

HermitianMatrix riccati_solution(const HermitianMatrix& a,
                                 const HermitianMatrix& b) {
  require_same_dim(a, b, "riccati_solution");
  require_pd(a, "riccati_solution", true);
  require_psd(b, "riccati_solution");
  // X = A^{-1} # B = A^{-1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2},
  // the unique PD solution of X A X = B.
  const HermitianMatrix a_sqrt = matrix_sqrt(a);
  const HermitianMatrix a_inv_sqrt = matrix_inv_sqrt(a);
  const HermitianMatrix mid = sqrt_of_gram(a_sqrt.mat() * psd_factor(b));
  return hermitize(a_inv_sqrt.mat() * mid.mat() * a_inv_sqrt.mat());
}

HermitianMatrix spectral_geomean(const HermitianMatrix& a,
                                 const HermitianMatrix& b) {
  require_same_dim(a, b, "spectral_geomean");
  require_pd(a, "spectral_geomean", true);
  require_psd(b, "spectral_geomean");
  const HermitianMatrix x = riccati_solution(a, b);
  const HermitianMatrix x_sqrt = matrix_sqrt(x);
  return hermitize(x_sqrt.mat() * a.mat() * x_sqrt.mat());
}

HermitianMatrix bures_cross(const HermitianMatrix& a,
                            const HermitianMatrix& b) {
  require_same_dim(a, b, "bures_cross");
  require_psd(a, "bures_cross");
  require_psd(b, "bures_cross");
  const HermitianMatrix a_sqrt = matrix_sqrt(a);
  return sqrt_of_gram(a_sqrt.mat() * psd_factor(b));
}

HermitianMatrix compute_mean(MeanKind kind, const HermitianMatrix& a,
                             const HermitianMatrix& b) {
  switch (kind) {
    case MeanKind::Arithmetic:
      return arithmetic_mean(a, b);
    case MeanKind::MetricGeometric:
      return metric_geomean(a, b);
    case MeanKind::SpectralGeometric:
      return spectral_geomean(a, b);
    case MeanKind::BuresCross:
      return bures_cross(a, b);
  }
  throw InvalidConfig("compute_mean: unknown kind");
}

double fidelity_amplitude(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix(), "fidelity_amplitude");
  return trace(bures_cross(rho.matrix(), sigma.matrix()));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double f = fidelity_amplitude(rho, sigma);
  return f * f;
}

}  // namespace tracewitness
