// functionals.hpp - positive linear functionals phi(X) = Tr(S X) and
// randomized traciality diagnostics.
#pragma once

#include <cstdint>

#include "tracewitness/linalg.hpp"

namespace tracewitness {

/// phi(X) = Tr(S X) for a PSD density matrix S, stored unnormalized.
/// Normalization is an explicit operation because the quadratic trace
/// inequalities are not homogeneous in S: the normalization choice changes
/// which of them hold.
class TraceFunctional {
 public:
  explicit TraceFunctional(const HermitianMatrix& density);  // NotPSDError

  const HermitianMatrix& density() const { return s_; }
  int dim() const { return s_.dim(); }

 private:
  HermitianMatrix s_;
};

/// Real part of Tr(S X) for Hermitian X; the imaginary part is checked to
/// be round-off and discarded.
double apply(const TraceFunctional& phi, const HermitianMatrix& x);

/// Tr(S X) for an arbitrary (not necessarily Hermitian) X.
Complex apply_raw(const TraceFunctional& phi, const Matrix& x);

/// max over sampled Hermitian pairs of
/// |phi(AB) - phi(BA)| / (1 + ||A||_F ||B||_F ||S||_F).
/// Zero (up to round-off) exactly when phi is tracial.
double commutator_defect(const TraceFunctional& phi, int sample_count,
                         std::uint64_t seed);

/// max - min of phi(|w><w|) over sampled random rank-one projections.
double rank_one_spread(const TraceFunctional& phi, int sample_count,
                       std::uint64_t seed);

struct TracialityVerdict {
  bool is_scalar;
  double commutator_defect;
  double rank_one_spread;
  double scalar_c;  // the c in S ~ cI; meaningful only when is_scalar
};

/// Spectral test: is_scalar iff lambda_max(S) - lambda_min(S) is below
/// tol * (1 + lambda_max(S)). The randomized defects are reported alongside
/// so thresholds live in one place.
TracialityVerdict classify_traciality(const TraceFunctional& phi, double tol,
                                      int sample_count = 100,
                                      std::uint64_t seed = 0);

/// Rescale S so that trace(S) = target_trace (1 for a state, n for the
/// trace-n normalization used by the quadratic characterization).
TraceFunctional normalize(const TraceFunctional& phi, double target_trace);

}  // namespace tracewitness
