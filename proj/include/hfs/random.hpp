#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace hfs {

/// Seeded mt19937_64 with portable real conversions. std::uniform_real_distribution
/// is implementation-defined, so doubles are formed from the top 53 bits instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  /// Uniform on the closed disk of radius r (area measure).
  std::complex<double> disk(double r) {
    const double rho = r * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return std::polar(rho, theta);
  }

  std::vector<std::complex<double>> disk_points(std::size_t n, double r) {
    std::vector<std::complex<double>> out(n);
    for (auto& z : out) z = disk(r);
    return out;
  }

  /// Real and imaginary parts uniform in [-1, 1].
  std::complex<double> unit_square() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hfs
