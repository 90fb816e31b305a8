// witnesses.hpp - constructive counterexample engine. For each trace
// inequality and each non-scalar positive functional, builds an explicit
// PD pair (A, B) violating it, by running the nearly-parallel pure-state
// constructions as parameter searches.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "tracewitness/functionals.hpp"
#include "tracewitness/means.hpp"

namespace tracewitness {

enum class InequalityKind {
  BuresAM,           // phi((A^{1/2} B A^{1/2})^{1/2}) <= (phi(A)+phi(B))/2
  SgmCauchySchwarz,  // phi(A natural B) <= sqrt(phi(A) phi(B))
  SgmSquared,        // phi((A natural B)^2) <= sqrt(phi(A^2) phi(B^2))
  SgmArithmetic,     // phi(A natural B) <= phi((A+B)/2)
  QuadSquare,        // Tr(S Y^2) <= (Tr S Y)^2
  OverlapFidelity,   // Tr(rho sigma) <= F(rho, sigma); holds for all states
};

/// Parameters of the rank-one constructions: u at angle theta, v at angle
/// theta + delta inside the selected eigenplane of S, phi_angle for the
/// direction z of the arithmetic-mean construction, weights lambda and mu,
/// and the PD regularizer epsilon.
struct RankOneParams {
  double theta = 0.0;
  double delta = 0.0;
  double phi_angle = 0.0;
  double lambda = 1.0;
  double mu = 1.0;
  double epsilon = 0.0;
};

/// Violations are certified relative to the scale of the right-hand side;
/// the inequalities are homogeneous of degree 1 or 2 in (A, B).
inline double violation_tolerance(double rhs) {
  return 1e-10 * (1.0 + std::abs(rhs));
}

/// One constructed inequality test: the functional, the pair (A, B), both
/// sides, and whether the inequality was strictly violated. Full matrices
/// are stored so every report can be replayed independently of the search
/// that produced it. Kind-specific scalars (fitted slopes, closed-form
/// checks) travel in `extras`.
struct WitnessReport {
  InequalityKind kind;
  RankOneParams params;
  TraceFunctional functional;
  HermitianMatrix a;
  HermitianMatrix b;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs; violated iff margin > violation_tolerance
  bool violated = false;
  std::map<std::string, double> extras;
};

/// Grid/halving budgets replacing the "sufficiently small" quantifiers:
/// delta starts at 0.1 and halves at most 40 times; epsilon starts at 1e-2
/// and halves at most 30 times. A non-scalar functional that exhausts the
/// grid without a violation is a defect the test suite reports loudly.
struct SearchLimits {
  double delta0 = 0.1;
  int max_delta_halvings = 40;
  double epsilon0 = 1e-2;
  int max_epsilon_halvings = 30;
};

/// F(theta, delta) = 2 |<u,v>| <u,Su> - <u,Su> - <v,Sv> for the planar unit
/// vectors u = (cos theta, sin theta), v rotated by delta. F > 0 certifies
/// failure of the Bures arithmetic-mean inequality on the rank-one pair.
double eval_F(double theta, double delta, const HermitianMatrix& s2);

/// Second-order model of F for S = diag(s, 1):
/// (s-1) sin(2 theta) delta - (1 + (s-1) sin^2 theta) delta^2.
/// The true F differs from this by O(delta^3).
double expansion_F(double theta, double delta, double s);

/// cos^2(delta) f(theta+delta) - f(theta) with f(t) = 1 + (s-1) cos^2(t).
/// A positive value certifies failure of the Cauchy-Schwarz-type bound for
/// the spectral geometric mean in the rank-one limit.
double sgm_cs_core_margin(double theta, double delta, double s);

/// gamma - alpha * beta with gamma = <u,Su>, beta = <v,Sv>,
/// alpha = |<u,v>|^2 (inputs renormalized). Negative certifies failure of
/// the arithmetic-mean bound for the induced regularized pair at mu = 1.
double amean_key_margin(const CVector& u, const CVector& v,
                        const HermitianMatrix& s);

/// Witness searches. Each returns violated = true for every PD non-scalar
/// functional (that is the theorem being executed) and a non-violated
/// report, after sweeping its full grid, for scalar ones.
WitnessReport bures_witness(const TraceFunctional& phi,
                            const SearchLimits& limits = {});
WitnessReport sgm_cs_witness(const TraceFunctional& phi,
                             const SearchLimits& limits = {});
WitnessReport amean_witness(const TraceFunctional& phi,
                            const SearchLimits& limits = {});

/// The explicit 2x2 epsilon-family behind the squared characterization:
///   A       = (1/2) [[1, 1], [1, 1+eps]]
///   X       = (1/4) [[2+2eps+eps^2, 2+eps], [2+eps, 2]]
///   X^{1/2} = (1/2) [[1+eps, 1], [1, 1]]
///   B       = X A X
///   A natural B        = (1/8) [[4+5eps+eps^2, 4+3eps], [4+3eps, 4+eps]]
///   (A natural B)^2    = (1/64) [[32+64eps+42eps^2+10eps^3+eps^4,
///                                 32+48eps+22eps^2+3eps^3], [., 32+32eps+10eps^2]]
/// All entries are evaluated from these closed forms.
struct SgmSquareFamily {
  double epsilon;
  HermitianMatrix a;
  HermitianMatrix x;
  HermitianMatrix x_sqrt;
  HermitianMatrix b;
  HermitianMatrix mean;     // A natural B
  HermitianMatrix mean_sq;  // (A natural B)^2
};

SgmSquareFamily sgm_square_family(double epsilon);

/// Witness for the squared inequality on the explicit family. Requires
/// S = diag(1/2 + s, 1/2 - s) with 0 <= s <= 1/2 in its eigenbasis
/// (InvalidFunctional otherwise). Also fits the slope of
/// lhs^2 - rhs^2 against epsilon on {1e-2, 1e-3, 1e-4}; the limit is s/2.
/// The slope and s are reported in extras["slope"] and extras["s"].
WitnessReport sgm_square_witness(const TraceFunctional& phi,
                                 const SearchLimits& limits = {});

enum class QuadSquareMode { Density, TraceN };

/// Witness for Tr(S Y^2) <= (Tr S Y)^2.
/// Density mode (trace S = 1): if S has an eigenvalue strictly inside
/// (0, 1), Y = P_w on its eigenvector violates; if S is a rank-one
/// projection |v><v|, Y = [[1, t], [t, 1]] (+ zero block) with t = 1/2 in a
/// basis starting at v gives lhs = 1 + t^2 = 1.25 against rhs = 1.
/// Trace-n mode (trace S = n): if lambda_min(S) < 1, Y = P_w on the minimal
/// eigenvector gives lhs = lambda_min > rhs = lambda_min^2; if S = I the
/// inequality holds and a seeded random sweep of sample_count PD matrices
/// documents the absence of violations.
/// Singular Y are regularized by +delta I with delta swept downward.
WitnessReport quad_square_witness(const TraceFunctional& phi, QuadSquareMode mode,
                                  int sample_count = 500, std::uint64_t seed = 0,
                                  const SearchLimits& limits = {});

struct MarginBreakdown {
  double lhs;
  double rhs;
  double margin;
};

/// Re-evaluate an inequality from (S, A, B) alone; used to replay stored
/// reports and by the CLI `check` command. For QuadSquare, A carries Y and
/// B is ignored. OverlapFidelity treats (A, B) as a density pair.
MarginBreakdown recompute_margin(InequalityKind kind, const TraceFunctional& phi,
                                 const HermitianMatrix& a,
                                 const HermitianMatrix& b);

}  // namespace tracewitness
