#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace bidual {

/// splitmix64 step; derives independent per-task seeds from one base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

/// Uniform sample from the closed complex unit disc.
inline std::complex<double> unit_disc(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = std::sqrt(u(rng));
  double theta = 2.0 * 3.14159265358979323846 * u(rng);
  return std::polar(r, theta);
}

}  // namespace bidual
