// linalg.hpp - dense Hermitian linear algebra: eigendecomposition, spectral
// matrix functions, definiteness checks, traces and Hilbert-Schmidt products.
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "tracewitness/errors.hpp"

namespace tracewitness {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Definiteness thresholds, scaled by the spectral radius of the matrix
/// under test. Relative scaling matters because the witness constructions
/// mix scales lambda, mu >> 1 with regularizers epsilon << 1.
inline double pd_tolerance(double max_abs_eig) {
  return 1e-10 * (1.0 + max_abs_eig);
}
inline double psd_tolerance(double max_abs_eig) {
  return 1e-8 * (1.0 + max_abs_eig);
}

/// A dense n x n complex matrix that is exactly Hermitian in storage.
/// Construction symmetrizes (M + M*)/2 and rejects inputs whose
/// anti-Hermitian part is large relative to the matrix itself.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  static HermitianMatrix identity(int n);
  static HermitianMatrix zero(int n);
  static HermitianMatrix diagonal(const RVector& d);
  static HermitianMatrix diagonal2(double a, double b);

 private:
  Matrix m_;
};

/// Symmetrize a square matrix. Throws AsymmetryError when
/// ||M - M*||_F > 1e-8 * (1 + ||M||_F), which signals a caller bug or a
/// numerical blow-up rather than round-off.
HermitianMatrix hermitize(const Matrix& m);

struct EigenDecomposition {
  RVector eigenvalues;  // ascending
  Matrix eigenvectors;  // orthonormal columns, same order as eigenvalues

  Matrix reconstruct() const;
};

/// Full eigendecomposition with ascending eigenvalues.
EigenDecomposition eig_hermitian(const HermitianMatrix& h);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct DefinitenessClass {
  Definiteness tag;
  double min_eigenvalue;
};

DefinitenessClass classify_definiteness(const HermitianMatrix& h);

/// Spectral map applied eigenvalue-wise by matrix_function.
struct SpectralMap {
  enum class Kind { Sqrt, InvSqrt, Square, Power };
  Kind kind;
  double exponent = 1.0;  // used by Power only

  static SpectralMap sqrt() { return {Kind::Sqrt}; }
  static SpectralMap inv_sqrt() { return {Kind::InvSqrt}; }
  static SpectralMap square() { return {Kind::Square}; }
  static SpectralMap power(double p) { return {Kind::Power, p}; }
};

/// V diag(f(lambda)) V*. Domain rules:
///  - sqrt (and power with non-integer p >= 0): eigenvalues below
///    -psd_tolerance are rejected; values in (-psd_tolerance, 0) are
///    clipped to 0 so that epsilon->0 boundary cases stay usable.
///  - inv_sqrt (and power with p < 0): eigenvalues below pd_tolerance are
///    rejected.
HermitianMatrix matrix_function(const HermitianMatrix& h, SpectralMap f);

inline HermitianMatrix matrix_sqrt(const HermitianMatrix& h) {
  return matrix_function(h, SpectralMap::sqrt());
}
inline HermitianMatrix matrix_inv_sqrt(const HermitianMatrix& h) {
  return matrix_function(h, SpectralMap::inv_sqrt());
}

/// Trace of a Hermitian matrix as a real number. The imaginary part is
/// checked against 1e-10 * (1 + ||H||_F) and discarded.
double trace(const HermitianMatrix& h);

/// Hilbert-Schmidt inner product <A,B> = Tr(A* B).
Complex hs_inner(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix scalar_mul(Complex c, const Matrix& m);
Matrix conj_transpose(const Matrix& m);

/// lambda_max / lambda_min for a PD matrix (callers check PD first).
double condition_number(const HermitianMatrix& h);

/// Rank-one projector |u><u| (u is normalized first).
Matrix rank_one_projector(const CVector& u);

}  // namespace tracewitness
