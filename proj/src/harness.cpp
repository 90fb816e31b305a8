#include "tracewitness/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "tracewitness/log.hpp"
#include "tracewitness/witnesses.hpp"

namespace tracewitness {

PdDraw random_pd_draw(const SamplerConfig& cfg, Rng& rng) {
  if (cfg.dim < 1) throw InvalidConfig("random_pd: dim must be >= 1");
  if (!(cfg.pd_shift > 0.0)) throw InvalidConfig("random_pd: pd_shift must be > 0");
  for (int attempt = 1; attempt <= 100; ++attempt) {
    const Matrix g = gaussian_matrix(rng, cfg.dim);
    const HermitianMatrix h = hermitize(
        g * g.adjoint() +
        cfg.pd_shift * Matrix::Identity(cfg.dim, cfg.dim));
    if (condition_number(h) <= cfg.cond_cap) {
      return {h, attempt};
    }
  }
  throw SamplerExhausted(
      "random_pd: no draw satisfied the condition cap in 100 attempts");
}

HermitianMatrix random_pd(const SamplerConfig& cfg, Rng& rng) {
  return random_pd_draw(cfg, rng).matrix;
}

HermitianMatrix random_pd(const SamplerConfig& cfg) {
  Rng rng(cfg.seed);
  return random_pd(cfg, rng);
}

CVector random_unit_vector(const SamplerConfig& cfg, Rng& rng) {
  return gaussian_unit_vector(rng, cfg.dim);
}

CVector random_unit_vector(const SamplerConfig& cfg) {
  Rng rng(cfg.seed);
  return random_unit_vector(cfg, rng);
}

Matrix random_unitary(const SamplerConfig& cfg, Rng& rng) {
  const int n = cfg.dim;
  Matrix g = gaussian_matrix(rng, n);
  // Modified Gram-Schmidt with one reorthogonalization pass.
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        const Complex proj = g.col(k).adjoint() * g.col(j);
        g.col(j) -= proj * g.col(k);
      }
    }
    g.col(j) /= g.col(j).norm();
    // Phase fixing: rotate the first non-negligible entry to real positive.
    for (int i = 0; i < n; ++i) {
      const Complex z = g(i, j);
      if (std::abs(z) > 1e-12) {
        g.col(j) *= std::conj(z) / std::abs(z);
        break;
      }
    }
  }
  return g;
}

Matrix random_unitary(const SamplerConfig& cfg) {
  Rng rng(cfg.seed);
  return random_unitary(cfg, rng);
}

DensityMatrix random_density(const SamplerConfig& cfg, Rng& rng) {
  const HermitianMatrix h = random_pd(cfg, rng);
  return DensityMatrix(hermitize(h.mat() / trace(h)));
}

DensityMatrix random_density(const SamplerConfig& cfg) {
  Rng rng(cfg.seed);
  return random_density(cfg, rng);
}

double slope_estimate(const std::vector<double>& grid,
                      const std::vector<double>& values) {
  if (grid.size() < 3) {
    throw DegenerateGrid("slope_estimate: need at least 3 grid points");
  }
  if (grid.size() != values.size()) {
    throw DegenerateGrid("slope_estimate: grid/value lengths differ");
  }
  const double n = static_cast<double>(grid.size());
  const double mean_x = std::accumulate(grid.begin(), grid.end(), 0.0) / n;
  const double mean_y = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    sxx += (grid[i] - mean_x) * (grid[i] - mean_x);
    sxy += (grid[i] - mean_x) * (values[i] - mean_y);
  }
  if (sxx == 0.0) {
    throw DegenerateGrid("slope_estimate: grid points coincide");
  }
  return sxy / sxx;
}

double slope_estimate(const std::function<double(double)>& family,
                      const std::vector<double>& grid) {
  std::vector<double> values;
  values.reserve(grid.size());
  for (double x : grid) values.push_back(family(x));
  return slope_estimate(grid, values);
}

namespace {

/// One named check: runs `body(index)` cfg.count times (or a caller-chosen
/// number), where body returns the violation-side margin (positive = bad).
class CheckRunner {
 public:
  CheckRunner(const SamplerConfig& cfg, SuiteReport& report)
      : cfg_(cfg), report_(report) {}

  template <typename Body>
  void run(const std::string& name, int samples, Body&& body) {
    CheckResult result;
    result.name = name;
    result.samples = samples;
    result.seed = derive_seed(cfg_.seed, name);
    result.worst_margin = -std::numeric_limits<double>::infinity();
    Rng rng(result.seed);
    for (int i = 0; i < samples; ++i) {
      const double margin = body(rng, i);
      if (margin > result.worst_margin) {
        result.worst_margin = margin;
        result.worst_index = i;
      }
      if (margin > 0.0) ++result.failures;
    }
    log_debug("check " + name + ": worst margin " +
              std::to_string(result.worst_margin));
    report_.checks.push_back(std::move(result));
  }

  template <typename Body>
  void run(const std::string& name, Body&& body) {
    run(name, cfg_.count, std::forward<Body>(body));
  }

 private:
  const SamplerConfig& cfg_;
  SuiteReport& report_;
};

struct PdPair {
  HermitianMatrix a;
  HermitianMatrix b;
};

PdPair sample_pd_pair(const SamplerConfig& cfg, Rng& rng) {
  return {random_pd(cfg, rng), random_pd(cfg, rng)};
}

RVector sorted_sqrt_spectrum_of_product(const HermitianMatrix& a,
                                        const HermitianMatrix& b) {
  // Spectrum of AB through the similar Hermitian matrix A^{1/2} B A^{1/2}.
  const HermitianMatrix a_sqrt = matrix_sqrt(a);
  const EigenDecomposition es =
      eig_hermitian(hermitize(a_sqrt.mat() * b.mat() * a_sqrt.mat()));
  RVector roots(es.eigenvalues.size());
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    roots[i] = std::sqrt(std::max(0.0, es.eigenvalues[i]));
  }
  return roots;
}

}  // namespace

SuiteReport run_suite(const SamplerConfig& cfg) {
  if (cfg.count < 1) throw InvalidConfig("run_suite: count must be >= 1");
  if (cfg.dim < 2) throw InvalidConfig("run_suite: dim must be >= 2");

  SuiteReport report;
  report.config = cfg;
  CheckRunner checks(cfg, report);
  const int n = cfg.dim;

  // -- means invariants ------------------------------------------------

  checks.run("means/eigenvalue_identity", [&](Rng& rng, int) {
    const PdPair p = sample_pd_pair(cfg, rng);
    const EigenDecomposition es = eig_hermitian(spectral_geomean(p.a, p.b));
    const RVector expected = sorted_sqrt_spectrum_of_product(p.a, p.b);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < expected.size(); ++i) {
      worst = std::max(worst, std::abs(es.eigenvalues[i] - expected[i]) /
                                  (1.0 + std::abs(expected[i])));
    }
    return worst - 1e-8;
  });

  checks.run("means/trace_cs_bound", [&](Rng& rng, int) {
    const PdPair p = sample_pd_pair(cfg, rng);
    const double lhs = trace(spectral_geomean(p.a, p.b));
    return lhs - std::sqrt(trace(p.a) * trace(p.b)) - 1e-9;
  });

  checks.run("means/squared_trace_identity", [&](Rng& rng, int) {
    const PdPair p = sample_pd_pair(cfg, rng);
    const HermitianMatrix m = spectral_geomean(p.a, p.b);
    const double m2 = trace(hermitize(m.mat() * m.mat()));
    const double ab = std::real((p.a.mat() * p.b.mat()).trace());
    const double identity_defect = std::abs(m2 - ab) / (1.0 + std::abs(ab)) - 1e-8;
    const double a2 = trace(hermitize(p.a.mat() * p.a.mat()));
    const double b2 = trace(hermitize(p.b.mat() * p.b.mat()));
    const double bound_defect = ab - std::sqrt(a2 * b2) - 1e-9;
    return std::max(identity_defect, bound_defect);
  });

  checks.run("means/commutation_iff", [&](Rng& rng, int) {
    // Commuting pair: common eigenbasis, so # and natural coincide.
    const Matrix u = random_unitary(cfg, rng);
    RVector d1(n), d2(n);
    for (int i = 0; i < n; ++i) {
      d1[i] = 0.2 + rng.next_unit();
      d2[i] = 0.2 + rng.next_unit();
    }
    const HermitianMatrix ca = hermitize(
        u * d1.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint());
    const HermitianMatrix cb = hermitize(
        u * d2.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint());
    const HermitianMatrix metric_c = metric_geomean(ca, cb);
    const double same = (metric_c.mat() - spectral_geomean(ca, cb).mat()).norm() -
                        1e-8 * (1.0 + metric_c.mat().norm());
    // Generic pair: means must differ once the commutator is macroscopic.
    const PdPair p = sample_pd_pair(cfg, rng);
    const double comm = (p.a.mat() * p.b.mat() - p.b.mat() * p.a.mat()).norm();
    double differ = -1.0;
    if (comm > 1e-3) {
      const double gap =
          (metric_geomean(p.a, p.b).mat() - spectral_geomean(p.a, p.b).mat())
              .norm();
      differ = 1e-10 - gap;
    }
    return std::max(same, differ);
  });

  checks.run("means/unitary_congruence", [&](Rng& rng, int) {
    const PdPair p = sample_pd_pair(cfg, rng);
    const Matrix u = random_unitary(cfg, rng);
    const HermitianMatrix direct = spectral_geomean(p.a, p.b);
    const HermitianMatrix rotated =
        spectral_geomean(hermitize(u.adjoint() * p.a.mat() * u),
                         hermitize(u.adjoint() * p.b.mat() * u));
    const double defect =
        (u.adjoint() * direct.mat() * u - rotated.mat()).norm();
    return defect - 1e-8 * (1.0 + direct.mat().norm());
  });

  checks.run("means/loewner_agm", [&](Rng& rng, int) {
    const PdPair p = sample_pd_pair(cfg, rng);
    const HermitianMatrix gap = hermitize(arithmetic_mean(p.a, p.b).mat() -
                                          metric_geomean(p.a, p.b).mat());
    const DefinitenessClass cls = classify_definiteness(gap);
    return cls.tag == Definiteness::Indefinite ? -cls.min_eigenvalue : -1.0;
  });

  checks.run("means/trace_agm_sgm", [&](Rng& rng, int) {
    const PdPair p = sample_pd_pair(cfg, rng);
    const double lhs = trace(spectral_geomean(p.a, p.b));
    return lhs - trace(arithmetic_mean(p.a, p.b)) - 1e-9;
  });

  checks.run("means/overlap_fidelity_bound", [&](Rng& rng, int) {
    const DensityMatrix rho = random_density(cfg, rng);
    const DensityMatrix sigma = random_density(cfg, rng);
    const double overlap =
        std::real(hs_inner(rho.matrix().mat(), sigma.matrix().mat()));
    return overlap - fidelity(rho, sigma) - 1e-9;
  });

  // -- functionals invariants -------------------------------------------

  checks.run("functionals/traciality_equivalence", [&](Rng& rng, int i) {
    const bool scalar_case = (i % 2 == 0);
    HermitianMatrix s = scalar_case
                            ? hermitize((0.5 + 2.0 * rng.next_unit()) *
                                        Matrix::Identity(n, n))
                            : random_pd(cfg, rng);
    const TraceFunctional phi(s);
    const double tol = 1e-10;
    const TracialityVerdict verdict =
        classify_traciality(phi, tol, 100, rng.next_u64());
    const bool defects_small = verdict.commutator_defect < 10.0 * tol &&
                               verdict.rank_one_spread < 10.0 * tol;
    return verdict.is_scalar == defects_small ? -1.0 : 1.0;
  });

  checks.run("functionals/kadison", [&](Rng& rng, int) {
    const DensityMatrix state = random_density(cfg, rng);
    const TraceFunctional phi(state.matrix());
    const HermitianMatrix a = gaussian_hermitian(rng, n);
    const double pa = apply(phi, a);
    const double pa2 = apply(phi, hermitize(a.mat() * a.mat()));
    return pa * pa - pa2 - 1e-9;
  });

  checks.run("functionals/positivity", [&](Rng& rng, int) {
    const TraceFunctional phi(random_pd(cfg, rng));
    const HermitianMatrix x = random_pd(cfg, rng);
    const double scale =
        1.0 + phi.density().mat().norm() * x.mat().norm();
    return -apply(phi, x) - 1e-10 * scale;
  });

  // -- witnesses invariants ---------------------------------------------

  checks.run("witnesses/completeness_nonscalar", [&](Rng& rng, int) {
    const TraceFunctional phi(random_pd(cfg, rng));
    const WitnessReport r1 = bures_witness(phi);
    const WitnessReport r2 = sgm_cs_witness(phi);
    const WitnessReport r3 = amean_witness(phi);
    return (r1.violated && r2.violated && r3.violated) ? -1.0 : 1.0;
  });

  checks.run("witnesses/soundness_replay",
             std::min(cfg.count, 25), [&](Rng& rng, int) {
    const TraceFunctional phi(random_pd(cfg, rng));
    double worst = -1.0;
    for (const WitnessReport& r :
         {bures_witness(phi), sgm_cs_witness(phi), amean_witness(phi)}) {
      if (!r.violated) return 1.0;  // completeness is checked separately
      const MarginBreakdown replay =
          recompute_margin(r.kind, r.functional, r.a, r.b);
      const double needed = violation_tolerance(replay.rhs);
      worst = std::max(worst, needed - replay.margin);
    }
    return worst;
  });

  checks.run("witnesses/scalar_immunity",
             std::min(cfg.count, 50), [&](Rng& rng, int) {
    const double c = 0.5 + 2.0 * rng.next_unit();
    const TraceFunctional phi(hermitize(c * Matrix::Identity(n, n)));
    const bool any = bures_witness(phi).violated ||
                     sgm_cs_witness(phi).violated ||
                     amean_witness(phi).violated;
    return any ? 1.0 : -1.0;
  });

  checks.run("witnesses/expansion_remainder", 1, [&](Rng&, int) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double s : {1.5, 2.0, 4.0}) {
      const HermitianMatrix s_mat = HermitianMatrix::diagonal2(s, 1.0);
      for (double delta : {1e-1, 1e-2, 1e-3}) {
        const double diff = std::abs(eval_F(std::numbers::pi / 4, delta, s_mat) -
                                     expansion_F(std::numbers::pi / 4, delta, s));
        const double ratio = diff / (delta * delta * delta);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
    return hi / lo - 10.0;  // the cubic-remainder ratio stays bounded
  });

  checks.run("witnesses/mu_optimality", [&](Rng& rng, int) {
    const TraceFunctional phi(random_pd(cfg, rng));
    const CVector u = gaussian_unit_vector(rng, n);
    const CVector v = gaussian_unit_vector(rng, n);
    const double alpha = std::norm(Complex(u.adjoint() * v));
    const double gamma =
        std::real(Complex(u.adjoint() * phi.density().mat() * u));
    const double beta =
        std::real(Complex(v.adjoint() * phi.density().mat() * v));
    // Limiting margin mu*alpha*beta - (gamma + mu^2*alpha*beta)/2 has its
    // maximum at mu = 1; verify on a grid with step 0.1.
    double best_mu = 0.0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 30; ++k) {
      const double mu = 0.1 * k;
      const double value = mu * alpha * beta - 0.5 * (gamma + mu * mu * alpha * beta);
      if (value > best_value) {
        best_value = value;
        best_mu = mu;
      }
    }
    return std::abs(best_mu - 1.0) - 0.1001;
  });

  checks.run("witnesses/quad_square_diag_s_ge_1", 3, [&](Rng& rng, int i) {
    const double s = (i == 0) ? 1.0 : (i == 1 ? 2.0 : 10.0);
    const TraceFunctional phi(HermitianMatrix::diagonal2(s, 1.0));
    SamplerConfig cfg2 = cfg;
    cfg2.dim = 2;
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 10000; ++k) {
      const HermitianMatrix y = random_pd(cfg2, rng);
      const double lhs = apply(phi, hermitize(y.mat() * y.mat()));
      const double t = apply(phi, y);
      worst = std::max(worst, lhs - t * t);
    }
    return worst;
  });

  // -- harness invariants -------------------------------------------------

  checks.run("harness/trace_unitary_invariance", [&](Rng& rng, int) {
    const TraceFunctional phi(HermitianMatrix::identity(n));
    const HermitianMatrix a = gaussian_hermitian(rng, n);
    const Matrix u = random_unitary(cfg, rng);
    const double rotated = apply(phi, hermitize(u.adjoint() * a.mat() * u));
    const double direct = apply(phi, a);
    const double scale = 1.0 + a.mat().norm() * std::sqrt(double(n));
    return std::abs(rotated - direct) - 1e-10 * scale;
  });

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.passed(); });
  return report;
}

}  // namespace tracewitness
