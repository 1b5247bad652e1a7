#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hfs/hfock.hpp"

namespace hfs::lerch {

using complex = std::complex<double>;
using hfock::GramMatrix;

/// Largest |z| accepted by the disk series.
inline constexpr double kDiskLimit = 1.0 - 1e-6;

/// phi_n(z) = sum_k z^k / (k + n). Disk series for |z| <= 1 - 1e-6; for real
/// z <= -0.5 the Laplace form int_0^inf e^{zt} E_n(t) dt, which also continues
/// phi_n to every real z <= -1.
complex phi(int n, complex z, double tol = 1e-12);

/// n phi_n(z), normalised to 1 at 0.
complex phi_tilde(int n, complex z, double tol = 1e-12);

/// log(1 + w) without cancellation for small w.
complex log1p(complex w);

/// Phi(z, s, a) = sum_k z^k / (k + a)^s by series, |z| <= 1 - 1e-6, s > 0, a > 0.
complex lerch_phi(complex z, double s, double a, double tol = 1e-12);

/// Phi(z, s, a) = Gamma(s)^{-1} int_0^inf t^{s-1} e^{-at} / (1 - z e^{-t}) dt, s >= 1.
complex lerch_phi_integral(complex z, double s, double a, double tol = 1e-12);

/// zeta(s, a) = sum_k (k + a)^{-s}, s > 1 + 1e-6, a > 0. The sum is cut at K and
/// the rest replaced by int_{K-1/2}^inf (t + a)^{-s} dt, whose error is about
/// s / (24 (K - 1/2 + a)^{s+1}).
double hurwitz_zeta(double s, double a, double tol = 1e-12);

/// zeta(s, a) = Gamma(s)^{-1} int_0^inf t^{s-1} e^{-at} / (1 - e^{-t}) dt.
double hurwitz_zeta_integral(double s, double a, double tol = 1e-12);

/// (phi_1(z conj w), -log(1 - z conj w) / (z conj w)), 0 < |z conj w| <= 1 - 1e-6.
std::pair<complex, complex> dirichlet_identity_check(complex z, complex w);

struct CmReport {
  int n = 1;
  int max_order = 0;
  /// smallest (-1)^j Delta_h^j f(a_i) over the grid, per order j.
  std::vector<double> min_value;
  /// number of grid positions with (-1)^j Delta_h^j f < -1e-10, per order j.
  std::vector<int> violations;
  bool pass = false;
};

/// Forward-difference sign pattern of a sampled function on a uniform grid.
CmReport cm_differences(std::span<const double> values, int max_order);

/// Complete-monotonicity evidence for a |-> phi_n(-a) on a uniform increasing
/// grid of positive reals, orders 0..max_order (<= 8).
CmReport cm_evidence(int n, std::span<const double> a_grid, int max_order);

/// Uniform grid lo, lo + h, ..., count points.
std::vector<double> uniform_grid(double lo, double h, int count);

/// Gram matrix of k_n(z, w) = phi_n(z conj w), points with |z| <= 1 - 1e-3.
GramMatrix gram_phi(int n, std::span<const complex> points);

enum class MlKernel { phi_tilde, eta0_K };

enum class Status { pass, fail, evidence };

std::string to_string(Status s);

struct Condition {
  std::string name;
  Status status = Status::fail;
  std::string details;
};

struct MlAudit {
  std::string kernel;
  std::vector<Condition> conditions;
  double value_at_0 = 0.0;
  double derivative_at_0 = 0.0;
};

/// i) phi(0) = 1 and phi'(0) > 0; ii) Gram PSD on 30 seeded random points;
/// iii) finite-difference complete monotonicity of a |-> phi(-a) to order 6,
/// reported as evidence whatever its outcome.
MlAudit ml_condition_audit(MlKernel kernel, int n = 1, std::uint64_t seed = 1);

}  // namespace hfs::lerch
