#include "tracewitness/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tracewitness/rng.hpp"

namespace tracewitness {

TraceFunctional::TraceFunctional(const HermitianMatrix& density) : s_(density) {
  if (classify_definiteness(density).tag == Definiteness::Indefinite) {
    throw NotPSDError("TraceFunctional: density matrix must be PSD");
  }
}

double apply(const TraceFunctional& phi, const HermitianMatrix& x) {
  if (phi.dim() != x.dim()) {
    throw DimensionMismatch("apply: functional and argument dimensions differ");
  }
  const Complex t = (phi.density().mat() * x.mat()).trace();
  const double scale =
      1.0 + phi.density().mat().norm() * x.mat().norm();
  if (std::abs(t.imag()) > 1e-10 * scale) {
    throw Error("apply: non-real value on a Hermitian argument");
  }
  return t.real();
}

Complex apply_raw(const TraceFunctional& phi, const Matrix& x) {
  if (x.rows() != phi.dim() || x.cols() != phi.dim()) {
    throw DimensionMismatch("apply_raw: shape mismatch");
  }
  return (phi.density().mat() * x).trace();
}

double commutator_defect(const TraceFunctional& phi, int sample_count,
                         std::uint64_t seed) {
  if (sample_count < 1) {
    throw InvalidConfig("commutator_defect: sample_count must be >= 1");
  }
  Rng rng(seed);
  const int n = phi.dim();
  const double s_norm = phi.density().mat().norm();
  double worst = 0.0;
  for (int i = 0; i < sample_count; ++i) {
    const HermitianMatrix a = gaussian_hermitian(rng, n);
    const HermitianMatrix b = gaussian_hermitian(rng, n);
    const Complex d = apply_raw(phi, a.mat() * b.mat()) -
                      apply_raw(phi, b.mat() * a.mat());
    const double scale = 1.0 + a.mat().norm() * b.mat().norm() * s_norm;
    worst = std::max(worst, std::abs(d) / scale);
  }
  return worst;
}

double rank_one_spread(const TraceFunctional& phi, int sample_count,
                       std::uint64_t seed) {
  if (sample_count < 1) {
    throw InvalidConfig("rank_one_spread: sample_count must be >= 1");
  }
  Rng rng(seed);
  const int n = phi.dim();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < sample_count; ++i) {
    const CVector w = gaussian_unit_vector(rng, n);
    const double value = std::real(Complex(w.adjoint() * phi.density().mat() * w));
    lo = std::min(lo, value);
    hi = std::max(hi, value);
  }
  return hi - lo;
}

TracialityVerdict classify_traciality(const TraceFunctional& phi, double tol,
                                      int sample_count, std::uint64_t seed) {
  const EigenDecomposition es = eig_hermitian(phi.density());
  const int n = phi.dim();
  const double lo = es.eigenvalues[0];
  const double hi = es.eigenvalues[n - 1];
  TracialityVerdict verdict;
  verdict.is_scalar = (hi - lo) <= tol * (1.0 + hi);
  verdict.scalar_c = trace(phi.density()) / n;
  verdict.commutator_defect =
      commutator_defect(phi, sample_count, derive_seed(seed, "commutator"));
  verdict.rank_one_spread =
      rank_one_spread(phi, sample_count, derive_seed(seed, "rank-one"));
  return verdict;
}

TraceFunctional normalize(const TraceFunctional& phi, double target_trace) {
  const double t = trace(phi.density());
  if (t <= 0.0) {
    throw InvalidFunctional("normalize: functional has non-positive trace");
  }
  if (target_trace <= 0.0) {
    throw InvalidConfig("normalize: target trace must be positive");
  }
  return TraceFunctional(
      hermitize((target_trace / t) * phi.density().mat()));
}

}  // namespace tracewitness
