// harness.hpp - seeded samplers for PD matrices, unit vectors, unitaries
// and density matrices, plus the randomized inequality verification suite.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tracewitness/means.hpp"
#include "tracewitness/rng.hpp"

namespace tracewitness {

struct SamplerConfig {
  int dim = 2;
  std::uint64_t seed = 0;
  int count = 100;        // samples per check
  double pd_shift = 1e-3;  // delta added as delta*I to Gram matrices
  double cond_cap = 1e12;  // draws above this condition number are rejected
};

struct PdDraw {
  HermitianMatrix matrix;
  int attempts;
};

/// G G* + delta I for a complex standard-normal G, resampled (at most 100
/// times, then SamplerExhausted) while the condition number exceeds
/// cfg.cond_cap.
PdDraw random_pd_draw(const SamplerConfig& cfg, Rng& rng);
HermitianMatrix random_pd(const SamplerConfig& cfg, Rng& rng);
HermitianMatrix random_pd(const SamplerConfig& cfg);

CVector random_unit_vector(const SamplerConfig& cfg, Rng& rng);
CVector random_unit_vector(const SamplerConfig& cfg);

/// Orthonormalization of a Gaussian matrix; each column's first
/// non-negligible entry is rotated to be real positive, which pins the
/// phase so draws are reproducible bit-for-bit.
Matrix random_unitary(const SamplerConfig& cfg, Rng& rng);
Matrix random_unitary(const SamplerConfig& cfg);

DensityMatrix random_density(const SamplerConfig& cfg, Rng& rng);
DensityMatrix random_density(const SamplerConfig& cfg);

struct CheckResult {
  std::string name;
  int samples = 0;
  int failures = 0;
  double worst_margin = 0.0;  // largest violation-side value observed
  int worst_index = -1;       // sample index attaining worst_margin
  std::uint64_t seed = 0;     // derived stream seed for this check

  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  SamplerConfig config;
  std::vector<CheckResult> checks;
  bool pass = false;
};

/// Runs every always-true invariant of the means/functionals/witnesses
/// modules plus the witness completeness and immunity checks, cfg.count
/// samples each, each check on its own derived stream. Deterministic:
/// identical cfg yields an identical report. Failures are data, not errors.
SuiteReport run_suite(const SamplerConfig& cfg);

/// Least-squares slope of value against epsilon through >= 3 grid points.
/// Used to extract the linear coefficients the expansions isolate.
double slope_estimate(const std::vector<double>& grid,
                      const std::vector<double>& values);
double slope_estimate(const std::function<double(double)>& family,
                      const std::vector<double>& grid);

}  // namespace tracewitness
