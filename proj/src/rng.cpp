#include "tracewitness/rng.hpp"

#include <cmath>
#include <numbers>

namespace tracewitness {

std::pair<double, double> Rng::next_gaussian_pair() {
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view name) {
  std::uint64_t z = master ^ fnv1a64(name);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Matrix gaussian_matrix(Rng& rng, int n) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [re, im] = rng.next_gaussian_pair();
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

HermitianMatrix gaussian_hermitian(Rng& rng, int n) {
  const Matrix g = gaussian_matrix(rng, n);
  return hermitize(0.5 * (g + g.adjoint().eval()));
}

CVector gaussian_unit_vector(Rng& rng, int n) {
  CVector v(n);
  for (int i = 0; i < n; ++i) {
    const auto [re, im] = rng.next_gaussian_pair();
    v[i] = Complex(re, im);
  }
  return v / v.norm();
}

}  // namespace tracewitness
