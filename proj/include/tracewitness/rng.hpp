// rng.hpp - deterministic random number generation
//
// Reproducibility is an external contract of this library, so the generator
// is pinned rather than delegated: the raw stream is splitmix64 (pure 64-bit
// integer arithmetic, identical on every platform), uniforms are the top 53
// bits mapped into (0,1], and Gaussians come from Box-Muller applied to that
// uniform stream. Each named check derives its own seed from the master
// seed, so adding checks never perturbs existing streams.
#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "tracewitness/linalg.hpp"

namespace tracewitness {

/// splitmix64: increment by the golden-ratio gamma, output a bijective mix.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in (0,1]; never 0, so log() is safe.
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// One Box-Muller draw: two independent standard normals.
  std::pair<double, double> next_gaussian_pair();

 private:
  std::uint64_t state_;
};

/// 64-bit FNV-1a of a check name, mixed with the master seed through the
/// splitmix64 finalizer. Used to give every named check its own stream.
std::uint64_t fnv1a64(std::string_view s);
std::uint64_t derive_seed(std::uint64_t master, std::string_view name);

/// n x n matrix of independent standard complex Gaussians (each component
/// is one Box-Muller pair: real part first, imaginary part second).
Matrix gaussian_matrix(Rng& rng, int n);

/// (G + G*)/2 for a complex Gaussian G.
HermitianMatrix gaussian_hermitian(Rng& rng, int n);

/// Normalized complex Gaussian vector.
CVector gaussian_unit_vector(Rng& rng, int n);

}  // namespace tracewitness
