// means.hpp - matrix means on positive definite matrices and quantum
// fidelity: arithmetic mean, metric geometric mean A # B, spectral
// geometric mean A natural B, Bures cross term, Riccati solver.
#pragma once

#include "tracewitness/linalg.hpp"

namespace tracewitness {

enum class MeanKind { Arithmetic, MetricGeometric, SpectralGeometric, BuresCross };

/// PSD matrix with unit trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(const HermitianMatrix& m);  // throws NotDensityError

  const HermitianMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  HermitianMatrix m_;
};

/// Inverse-based means refuse inputs with condition number above this cap;
/// inv_sqrt amplifies noise quadratically inside the # formula.
inline constexpr double kConditionCap = 1e12;

/// (A + B) / 2.
HermitianMatrix arithmetic_mean(const HermitianMatrix& a, const HermitianMatrix& b);

/// Metric (Kubo-Ando) geometric mean
///   A # B = A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}.
HermitianMatrix metric_geomean(const HermitianMatrix& a, const HermitianMatrix& b);

/// The unique PD solution X of X A X = B, namely X = A^{-1} # B.
HermitianMatrix riccati_solution(const HermitianMatrix& a, const HermitianMatrix& b);

/// Spectral (Fiedler-Ptak) geometric mean
///   A natural B = (A^{-1} # B)^{1/2} A (A^{-1} # B)^{1/2}.
/// Computed by this defining formula; the eigenvalue identity
/// lambda_j(A natural B) = sqrt(lambda_j(AB)) is the independent
/// cross-check used by the tests rather than a second production path.
HermitianMatrix spectral_geomean(const HermitianMatrix& a, const HermitianMatrix& b);

/// Bures cross term (A^{1/2} B A^{1/2})^{1/2}. Accepts PSD inputs: the
/// rank-one limits of the witness constructions live on the PSD boundary.
HermitianMatrix bures_cross(const HermitianMatrix& a, const HermitianMatrix& b);

HermitianMatrix compute_mean(MeanKind kind, const HermitianMatrix& a,
                             const HermitianMatrix& b);

/// Fidelity amplitude Tr sqrt(sqrt(rho) sigma sqrt(rho)) and Uhlmann
/// fidelity (its square).
double fidelity_amplitude(const DensityMatrix& rho, const DensityMatrix& sigma);
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace tracewitness
