#include "tracewitness/witnesses.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "tracewitness/harness.hpp"
#include "tracewitness/log.hpp"

namespace tracewitness {

namespace {

constexpr double kPi = std::numbers::pi;

/// The eigenplane of S spanned by the eigenvectors of its extreme
/// eigenvalues. All rank-one constructions live here: the gap a - b drives
/// every first-order violation term, so the extreme pair maximizes it.
struct EigenPlane {
  double a;    // largest eigenvalue
  double b;    // smallest eigenvalue
  CVector wa;  // eigenvector of a
  CVector wb;  // eigenvector of b
};

EigenPlane extreme_plane(const HermitianMatrix& s) {
  const EigenDecomposition es = eig_hermitian(s);
  const int n = s.dim();
  return {es.eigenvalues[n - 1], es.eigenvalues[0],
          es.eigenvectors.col(n - 1), es.eigenvectors.col(0)};
}

/// cos(angle) * wa + sin(angle) * wb; unit because wa, wb are orthonormal.
CVector plane_vector(const EigenPlane& plane, double angle) {
  return std::cos(angle) * plane.wa + std::sin(angle) * plane.wb;
}

Matrix shifted_projector(int n, double eps, double weight, const CVector& u) {
  return eps * Matrix::Identity(n, n) + weight * rank_one_projector(u);
}

/// Exact square root of eps I + mu |v><v|: the spectrum is {eps + mu} on v
/// and {eps} on the complement, so no solver is involved. The deep end of
/// the epsilon sweeps relies on this being well-conditioned at any eps.
Matrix shifted_projector_sqrt(int n, double eps, double mu, const CVector& v) {
  const Matrix pv = rank_one_projector(v);
  return std::sqrt(eps + mu) * pv +
         std::sqrt(eps) * (Matrix::Identity(n, n) - pv);
}

double expectation(const HermitianMatrix& s, const CVector& w) {
  return std::real(Complex(w.adjoint() * s.mat() * w));
}

WitnessReport make_report(InequalityKind kind, const RankOneParams& params,
                          const TraceFunctional& phi, const HermitianMatrix& a,
                          const HermitianMatrix& b, double lhs, double rhs) {
  return WitnessReport{kind,
                       params,
                       phi,
                       a,
                       b,
                       lhs,
                       rhs,
                       lhs - rhs,
                       (lhs - rhs) > violation_tolerance(rhs),
                       {}};
}

/// Shared state tracker for the epsilon sweeps: keeps the first violating
/// step if one occurs, otherwise the best-margin step seen.
struct SweepBest {
  bool have = false;
  double eps = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  Matrix a;
  Matrix b;

  void offer(double e, double l, double r, const Matrix& ma, const Matrix& mb) {
    const double m = l - r;
    if (!have || m > margin) {
      have = true;
      eps = e;
      lhs = l;
      rhs = r;
      margin = m;
      a = ma;
      b = mb;
    }
  }
};

void warn_if_scalar(const char* who, const TraceFunctional& phi) {
  const EigenDecomposition es = eig_hermitian(phi.density());
  const int n = phi.dim();
  const double lo = es.eigenvalues[0];
  const double hi = es.eigenvalues[n - 1];
  if (hi - lo <= 1e-10 * (1.0 + hi)) {
    std::ostringstream os;
    os << who << ": functional is a scalar multiple of the trace; "
       << "the search will sweep its full grid and report no violation";
    log_info(os.str());
  }
}

}  // namespace

double eval_F(double theta, double delta, const HermitianMatrix& s2) {
  if (s2.dim() != 2) {
    throw DimensionMismatch("eval_F: S must be 2x2");
  }
  CVector u(2), v(2);
  u << std::cos(theta), std::sin(theta);
  v << std::cos(theta + delta), std::sin(theta + delta);
  const double su = expectation(s2, u);
  const double sv = expectation(s2, v);
  const double overlap = std::abs(Complex(u.adjoint() * v));
  return 2.0 * overlap * su - su - sv;
}

double expansion_F(double theta, double delta, double s) {
  const double sin2t = std::sin(2.0 * theta);
  const double sint = std::sin(theta);
  return (s - 1.0) * sin2t * delta -
         (1.0 + (s - 1.0) * sint * sint) * delta * delta;
}

double sgm_cs_core_margin(double theta, double delta, double s) {
  const auto f = [s](double t) {
    const double c = std::cos(t);
    return 1.0 + (s - 1.0) * c * c;
  };
  const double c = std::cos(delta);
  return c * c * f(theta + delta) - f(theta);
}

double amean_key_margin(const CVector& u, const CVector& v,
                        const HermitianMatrix& s) {
  if (u.size() != s.dim() || v.size() != s.dim()) {
    throw DimensionMismatch("amean_key_margin: vector/matrix dims disagree");
  }
  const CVector un = u / u.norm();
  const CVector vn = v / v.norm();
  const double alpha = std::norm(Complex(un.adjoint() * vn));
  const double gamma = expectation(s, un);
  const double beta = expectation(s, vn);
  return gamma - alpha * beta;
}

WitnessReport bures_witness(const TraceFunctional& phi,
                            const SearchLimits& limits) {
  const int n = phi.dim();
  if (n < 2) throw InvalidFunctional("bures_witness: dimension must be >= 2");
  warn_if_scalar("bures_witness", phi);

  const EigenPlane plane = extreme_plane(phi.density());
  const HermitianMatrix s_block = HermitianMatrix::diagonal2(plane.a, plane.b);
  const double theta = kPi / 4.0;

  // Phase 1: shrink delta until the rank-one criterion F > 0. The linear
  // term of F is (a - b) sin(2 theta) delta, so delta > 0 is the violating
  // sign for a >= b. The acceptance threshold sits well above the round-off
  // of F itself: near delta = 0 the computed overlap can exceed 1 by an ulp
  // and fake a positive F for a scalar functional.
  const double f_threshold = 1e-9 * (1.0 + std::abs(plane.a));
  double delta = limits.delta0;
  double best_f = -std::numeric_limits<double>::infinity();
  bool delta_found = false;
  for (int i = 0; i <= limits.max_delta_halvings; ++i) {
    const double f = eval_F(theta, delta, s_block);
    best_f = std::max(best_f, f);
    if (f > f_threshold) {
      delta_found = true;
      break;
    }
    delta *= 0.5;
  }
  // A scalar functional exhausts the grid; run the epsilon sweep at the
  // widest angle, where the inequality holds with a margin well clear of
  // round-off, rather than near the delta -> 0 equality case.
  if (!delta_found) delta = limits.delta0;

  const CVector u = plane_vector(plane, theta);
  const CVector v = plane_vector(plane, theta + delta);
  const double lambda = 1.0;

  // Phase 2: shrink the PD regularizer until the strict rank-one violation
  // survives embedding as A = eps I + lambda |u><u|, B likewise on v.
  double eps = limits.epsilon0;
  SweepBest best;
  for (int j = 0; j <= limits.max_epsilon_halvings; ++j) {
    const Matrix ma = shifted_projector(n, eps, lambda, u);
    const Matrix mb = shifted_projector(n, eps, lambda, v);
    const HermitianMatrix a = hermitize(ma);
    const HermitianMatrix b = hermitize(mb);
    const double lhs = apply(phi, bures_cross(a, b));
    const double rhs = 0.5 * (apply(phi, a) + apply(phi, b));
    best.offer(eps, lhs, rhs, ma, mb);
    if (lhs - rhs > violation_tolerance(rhs)) break;
    eps *= 0.5;
  }

  RankOneParams params;
  params.theta = theta;
  params.delta = delta;
  params.lambda = lambda;
  params.epsilon = best.eps;
  WitnessReport report =
      make_report(InequalityKind::BuresAM, params, phi, hermitize(best.a),
                  hermitize(best.b), best.lhs, best.rhs);
  report.extras["rank_one_F"] = best_f;
  return report;
}

WitnessReport sgm_cs_witness(const TraceFunctional& phi,
                             const SearchLimits& limits) {
  const int n = phi.dim();
  if (n < 2) throw InvalidFunctional("sgm_cs_witness: dimension must be >= 2");
  warn_if_scalar("sgm_cs_witness", phi);

  const EigenPlane plane = extreme_plane(phi.density());
  const double s = plane.b > 0.0 ? plane.a / plane.b : plane.a;
  const double theta = kPi / 4.0;

  // f'(theta) = -(s-1) sin(2 theta) <= 0 here, and the violating sign makes
  // f'(theta) * delta positive, so delta is negative.
  const double core_threshold = 1e-9 * (1.0 + std::abs(s));
  double delta = -limits.delta0;
  double best_core = -std::numeric_limits<double>::infinity();
  bool delta_found = false;
  for (int i = 0; i <= limits.max_delta_halvings; ++i) {
    const double core = sgm_cs_core_margin(theta, delta, s);
    best_core = std::max(best_core, core);
    if (core > core_threshold) {
      delta_found = true;
      break;
    }
    delta *= 0.5;
  }
  if (!delta_found) delta = -limits.delta0;  // scalar case: widest angle

  const CVector u = plane_vector(plane, theta);
  const CVector v = plane_vector(plane, theta + delta);
  const double lambda = 1.0;
  const double mu = 1.0;

  // Phase 2: A = eps I + lambda P_u, X = eps I + mu P_v, B = X A X. By the
  // Riccati characterization A natural B = X^{1/2} A X^{1/2}, and X^{1/2}
  // has the explicit spectral form used here, which stays numerically exact
  // at the deep end of the sweep where B is nearly singular.
  double eps = limits.epsilon0;
  SweepBest best;
  for (int j = 0; j <= limits.max_epsilon_halvings; ++j) {
    const Matrix ma = shifted_projector(n, eps, lambda, u);
    const Matrix mx = shifted_projector(n, eps, mu, v);
    const Matrix mb = mx * ma * mx;
    const Matrix mx_sqrt = shifted_projector_sqrt(n, eps, mu, v);
    const HermitianMatrix a = hermitize(ma);
    const HermitianMatrix b = hermitize(mb);
    const HermitianMatrix natural = hermitize(mx_sqrt * ma * mx_sqrt);
    const double lhs = apply(phi, natural);
    const double rhs = std::sqrt(std::max(0.0, apply(phi, a) * apply(phi, b)));
    best.offer(eps, lhs, rhs, ma, mb);
    if (lhs - rhs > violation_tolerance(rhs)) break;
    eps *= 0.5;
  }

  RankOneParams params;
  params.theta = theta;
  params.delta = delta;
  params.lambda = lambda;
  params.mu = mu;
  params.epsilon = best.eps;
  WitnessReport report =
      make_report(InequalityKind::SgmCauchySchwarz, params, phi,
                  hermitize(best.a), hermitize(best.b), best.lhs, best.rhs);
  report.extras["core_margin"] = best_core;

  // Cross-validate the Riccati route against the production mean at the
  // reported eps whenever B is far enough from singular for the production
  // path to be meaningful.
  const double b_floor = best.eps * best.eps * best.eps * mu * mu * lambda;
  if (b_floor > 1e-13) {
    const HermitianMatrix via_production =
        spectral_geomean(hermitize(best.a), hermitize(best.b));
    const Matrix direct =
        shifted_projector_sqrt(n, best.eps, mu, v) * best.a *
        shifted_projector_sqrt(n, best.eps, mu, v);
    report.extras["sgm_consistency"] =
        (via_production.mat() - direct).norm();
  }
  return report;
}

WitnessReport amean_witness(const TraceFunctional& phi,
                            const SearchLimits& limits) {
  const int n = phi.dim();
  if (n < 2) throw InvalidFunctional("amean_witness: dimension must be >= 2");
  warn_if_scalar("amean_witness", phi);

  const EigenPlane plane = extreme_plane(phi.density());
  const double phi_angle = kPi / 4.0;

  // Theorem-style construction: with D = diag(a, b) on the extreme plane
  // and z at angle phi_angle, M = D - beta z z* (beta = <z, D z>) fails to
  // be PSD exactly when beta z* D^{-1} z > 1; its most negative eigenvector
  // is the direction u that breaks the key inequality gamma >= alpha beta.
  const double c = std::cos(phi_angle);
  const double sn = std::sin(phi_angle);
  const double beta = plane.a * c * c + plane.b * sn * sn;
  Matrix m2(2, 2);
  m2 << Complex(plane.a - beta * c * c), Complex(-beta * c * sn),
      Complex(-beta * c * sn), Complex(plane.b - beta * sn * sn);
  const EigenDecomposition m_es = eig_hermitian(hermitize(m2));
  CVector u2 = m_es.eigenvectors.col(0);
  // Rotate away the arbitrary eigenvector phase so theta below is readable.
  for (int i = 0; i < 2; ++i) {
    if (std::abs(u2[i]) > 1e-12) {
      u2 *= std::conj(u2[i]) / std::abs(u2[i]);
      break;
    }
  }

  const CVector u = u2[0] * plane.wa + u2[1] * plane.wb;
  const CVector v = plane_vector(plane, phi_angle);
  const double lambda = 1.0;
  const double mu = 1.0;

  double eps = limits.epsilon0;
  SweepBest best;
  for (int j = 0; j <= limits.max_epsilon_halvings; ++j) {
    const Matrix ma = shifted_projector(n, eps, lambda, u);
    const Matrix mx = shifted_projector(n, eps, mu, v);
    const Matrix mb = mx * ma * mx;
    const Matrix mx_sqrt = shifted_projector_sqrt(n, eps, mu, v);
    const HermitianMatrix a = hermitize(ma);
    const HermitianMatrix b = hermitize(mb);
    const double lhs = apply(phi, hermitize(mx_sqrt * ma * mx_sqrt));
    const double rhs = 0.5 * (apply(phi, a) + apply(phi, b));
    best.offer(eps, lhs, rhs, ma, mb);
    if (lhs - rhs > violation_tolerance(rhs)) break;
    eps *= 0.5;
  }

  RankOneParams params;
  params.theta = std::atan2(u2[1].real(), u2[0].real());
  params.phi_angle = phi_angle;
  params.lambda = lambda;
  params.mu = mu;
  params.epsilon = best.eps;
  WitnessReport report =
      make_report(InequalityKind::SgmArithmetic, params, phi,
                  hermitize(best.a), hermitize(best.b), best.lhs, best.rhs);
  const double inv_quad = c * c / plane.a + sn * sn / plane.b;
  report.extras["beta_z_dinv_z"] = beta * inv_quad;
  report.extras["m_min_eigenvalue"] = m_es.eigenvalues[0];
  report.extras["key_margin"] = amean_key_margin(u, v, phi.density());
  return report;
}

SgmSquareFamily sgm_square_family(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw InvalidConfig("sgm_square_family: epsilon must be positive");
  }
  const double e = epsilon;
  const double e2 = e * e;
  const double e3 = e2 * e;
  const double e4 = e2 * e2;
  Matrix a(2, 2), x(2, 2), xs(2, 2), b(2, 2), m(2, 2), m2(2, 2);
  a << 1.0, 1.0, 1.0, 1.0 + e;
  a *= 0.5;
  x << 2.0 + 2.0 * e + e2, 2.0 + e, 2.0 + e, 2.0;
  x *= 0.25;
  xs << 1.0 + e, 1.0, 1.0, 1.0;
  xs *= 0.5;
  b << 16.0 + 28.0 * e + 21.0 * e2 + 7.0 * e3 + e4,
      16.0 + 20.0 * e + 9.0 * e2 + e3, 16.0 + 20.0 * e + 9.0 * e2 + e3,
      16.0 + 12.0 * e + e2;
  b /= 32.0;
  m << 4.0 + 5.0 * e + e2, 4.0 + 3.0 * e, 4.0 + 3.0 * e, 4.0 + e;
  m /= 8.0;
  m2 << 32.0 + 64.0 * e + 42.0 * e2 + 10.0 * e3 + e4,
      32.0 + 48.0 * e + 22.0 * e2 + 3.0 * e3,
      32.0 + 48.0 * e + 22.0 * e2 + 3.0 * e3, 32.0 + 32.0 * e + 10.0 * e2;
  m2 /= 64.0;
  return {epsilon,      hermitize(a), hermitize(x), hermitize(xs),
          hermitize(b), hermitize(m), hermitize(m2)};
}

WitnessReport sgm_square_witness(const TraceFunctional& phi,
                                 const SearchLimits& limits) {
  if (phi.dim() != 2) {
    throw InvalidFunctional("sgm_square_witness: S must be 2x2");
  }
  const Matrix& sm = phi.density().mat();
  if (std::abs(sm(0, 1)) > 1e-10 || std::abs(sm(1, 0)) > 1e-10) {
    throw InvalidFunctional(
        "sgm_square_witness: S must be diagonal in the supplied basis");
  }
  const double s00 = sm(0, 0).real();
  const double s11 = sm(1, 1).real();
  if (std::abs(s00 + s11 - 1.0) > 1e-10) {
    throw InvalidFunctional("sgm_square_witness: S must have trace 1");
  }
  if (s00 + 1e-10 < s11) {
    throw InvalidFunctional(
        "sgm_square_witness: S must be diag(1/2 + s, 1/2 - s) with s >= 0");
  }
  const double s = std::max(0.0, s00 - 0.5);

  struct Step {
    SgmSquareFamily fam;
    double lhs;
    double rhs;
  };
  const auto evaluate = [&phi](double eps) -> Step {
    SgmSquareFamily fam = sgm_square_family(eps);
    const double lhs = apply(phi, fam.mean_sq);
    const double pa2 = apply(phi, hermitize(fam.a.mat() * fam.a.mat()));
    const double pb2 = apply(phi, hermitize(fam.b.mat() * fam.b.mat()));
    const double rhs = std::sqrt(std::max(0.0, pa2 * pb2));
    return {std::move(fam), lhs, rhs};
  };

  double eps = limits.epsilon0;
  SweepBest best;
  for (int j = 0; j <= limits.max_epsilon_halvings; ++j) {
    const Step step = evaluate(eps);
    best.offer(eps, step.lhs, step.rhs, step.fam.a.mat(), step.fam.b.mat());
    if (step.lhs - step.rhs > violation_tolerance(step.rhs)) break;
    eps *= 0.5;
  }

  // Fitted slope of lhs^2 - rhs^2 against epsilon; the expansions make this
  // approach s/2 as epsilon -> 0.
  const std::vector<double> grid = {1e-2, 1e-3, 1e-4};
  std::vector<double> gaps;
  gaps.reserve(grid.size());
  for (double g : grid) {
    const Step step = evaluate(g);
    gaps.push_back(step.lhs * step.lhs - step.rhs * step.rhs);
  }

  RankOneParams params;
  params.epsilon = best.eps;
  WitnessReport report =
      make_report(InequalityKind::SgmSquared, params, phi, hermitize(best.a),
                  hermitize(best.b), best.lhs, best.rhs);
  report.extras["s"] = s;
  report.extras["slope"] = slope_estimate(grid, gaps);
  return report;
}

WitnessReport quad_square_witness(const TraceFunctional& phi,
                                  QuadSquareMode mode, int sample_count,
                                  std::uint64_t seed,
                                  const SearchLimits& limits) {
  const int n = phi.dim();
  if (n < 2) {
    throw InvalidFunctional("quad_square_witness: dimension must be >= 2");
  }
  const double target = mode == QuadSquareMode::Density ? 1.0 : double(n);
  const double tr = trace(phi.density());
  if (std::abs(tr - target) > 1e-8) {
    std::ostringstream os;
    os << "quad_square_witness: trace " << tr << " does not match the "
       << (mode == QuadSquareMode::Density ? "density" : "trace-n")
       << " normalization target " << target;
    throw NormalizationError(os.str());
  }

  const EigenDecomposition es = eig_hermitian(phi.density());

  const auto margin_of = [&phi](const Matrix& y, double& lhs, double& rhs) {
    const HermitianMatrix hy = hermitize(y);
    lhs = apply(phi, hermitize(y * y));
    const double t = apply(phi, hy);
    rhs = t * t;
  };

  // Sweep Y + delta I downward until the strict violation of the
  // unregularized PSD witness survives; skip the sweep when Y is already PD.
  const auto regularized_report =
      [&](const Matrix& y0, RankOneParams params,
          std::map<std::string, double> extras) -> WitnessReport {
    SweepBest best;
    const bool already_pd =
        classify_definiteness(hermitize(y0)).tag == Definiteness::PositiveDefinite;
    if (already_pd) {
      double lhs = 0.0, rhs = 0.0;
      margin_of(y0, lhs, rhs);
      best.offer(0.0, lhs, rhs, y0, y0);
    } else {
      double delta = limits.epsilon0;
      for (int j = 0; j <= limits.max_epsilon_halvings; ++j) {
        const Matrix y = y0 + delta * Matrix::Identity(n, n);
        double lhs = 0.0, rhs = 0.0;
        margin_of(y, lhs, rhs);
        best.offer(delta, lhs, rhs, y, y);
        if (lhs - rhs > violation_tolerance(rhs)) break;
        delta *= 0.5;
      }
    }
    params.epsilon = best.eps;
    WitnessReport report =
        make_report(InequalityKind::QuadSquare, params, phi, hermitize(best.a),
                    hermitize(best.b), best.lhs, best.rhs);
    report.extras = std::move(extras);
    return report;
  };

  if (mode == QuadSquareMode::Density) {
    // A density S that is not a rank-one projection has an eigenvalue
    // strictly inside (0, 1); Y = P_w on its eigenvector then gives
    // lhs = x > x^2 = rhs. Pick the one with the largest gap x - x^2.
    int pick = -1;
    double best_obj = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = es.eigenvalues[i];
      if (x > 1e-8 && x < 1.0 - 1e-8 && x * (1.0 - x) > best_obj) {
        best_obj = x * (1.0 - x);
        pick = i;
      }
    }
    if (pick >= 0) {
      RankOneParams params;
      params.lambda = 1.0;
      return regularized_report(
          rank_one_projector(es.eigenvectors.col(pick)), params,
          {{"witness_eigenvalue", es.eigenvalues[pick]}});
    }
    // Rank-one S = |v><v|: in a basis starting at v, the PSD matrix
    // [[1, t], [t, 1]] (zero elsewhere) with t = 1/2 gives
    // lhs = 1 + t^2 = 1.25 against rhs = 1.
    const CVector v = es.eigenvectors.col(n - 1);
    const CVector e = es.eigenvectors.col(n - 2);
    const double t = 0.5;
    const Matrix y0 = rank_one_projector(v) + rank_one_projector(e) +
                      t * (v * e.adjoint() + e * v.adjoint());
    RankOneParams params;
    params.lambda = t;
    return regularized_report(y0, params, {{"t", t}});
  }

  // Trace-n mode. Y = |w><w| on the minimal eigenvector is used as-is: it
  // is idempotent, so lhs = lambda_min against rhs = lambda_min^2 exactly,
  // which is the violation whenever 0 < lambda_min < 1.
  const double lambda_min = es.eigenvalues[0];
  if (lambda_min < 1.0 - 1e-8) {
    const Matrix y = rank_one_projector(es.eigenvectors.col(0));
    double lhs = 0.0, rhs = 0.0;
    margin_of(y, lhs, rhs);
    RankOneParams params;
    params.lambda = 1.0;
    WitnessReport report =
        make_report(InequalityKind::QuadSquare, params, phi, hermitize(y),
                    hermitize(y), lhs, rhs);
    report.extras["lambda_min"] = lambda_min;
    return report;
  }

  // S = I within tolerance: the inequality holds; document that a seeded
  // random sweep finds no violation.
  if (sample_count < 1) {
    throw InvalidConfig("quad_square_witness: sample_count must be >= 1");
  }
  Rng rng(seed);
  SamplerConfig cfg;
  cfg.dim = n;
  cfg.seed = seed;
  SweepBest best;
  for (int i = 0; i < sample_count; ++i) {
    const HermitianMatrix y = random_pd(cfg, rng);
    double lhs = 0.0, rhs = 0.0;
    margin_of(y.mat(), lhs, rhs);
    best.offer(0.0, lhs, rhs, y.mat(), y.mat());
  }
  RankOneParams params;
  WitnessReport report =
      make_report(InequalityKind::QuadSquare, params, phi, hermitize(best.a),
                  hermitize(best.b), best.lhs, best.rhs);
  report.extras["lambda_min"] = lambda_min;
  report.extras["random_samples"] = double(sample_count);
  return report;
}

MarginBreakdown recompute_margin(InequalityKind kind,
                                 const TraceFunctional& phi,
                                 const HermitianMatrix& a,
                                 const HermitianMatrix& b) {
  double lhs = 0.0;
  double rhs = 0.0;
  switch (kind) {
    case InequalityKind::BuresAM:
      lhs = apply(phi, bures_cross(a, b));
      rhs = 0.5 * (apply(phi, a) + apply(phi, b));
      break;
    case InequalityKind::SgmCauchySchwarz:
      lhs = apply(phi, spectral_geomean(a, b));
      rhs = std::sqrt(std::max(0.0, apply(phi, a) * apply(phi, b)));
      break;
    case InequalityKind::SgmSquared: {
      const HermitianMatrix m = spectral_geomean(a, b);
      lhs = apply(phi, hermitize(m.mat() * m.mat()));
      const double pa2 = apply(phi, hermitize(a.mat() * a.mat()));
      const double pb2 = apply(phi, hermitize(b.mat() * b.mat()));
      rhs = std::sqrt(std::max(0.0, pa2 * pb2));
      break;
    }
    case InequalityKind::SgmArithmetic:
      lhs = apply(phi, spectral_geomean(a, b));
      rhs = 0.5 * (apply(phi, a) + apply(phi, b));
      break;
    case InequalityKind::QuadSquare: {
      lhs = apply(phi, hermitize(a.mat() * a.mat()));
      const double t = apply(phi, a);
      rhs = t * t;
      break;
    }
    case InequalityKind::OverlapFidelity: {
      const DensityMatrix rho(a);
      const DensityMatrix sigma(b);
      lhs = std::real(hs_inner(a.mat(), b.mat()));
      rhs = fidelity(rho, sigma);
      break;
    }
  }
  return {lhs, rhs, lhs - rhs};
}

}  // namespace tracewitness
