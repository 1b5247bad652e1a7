#pragma once

#include <Eigen/Core>
#include <complex>
#include <string_view>
#include <utility>
#include <vector>

#include "hfs/summation.hpp"

namespace hfs::moments {

using complex = std::complex<double>;

enum class MomentRoute { quadrature, closed_form, binomial };

std::string_view to_string(MomentRoute route);

/// eta_n = int_0^inf t^n e^{-t} / (1+t)^2 dt for n = 0..n_max.
///
/// Linear values overflow binary64 from n = 171 on and are stored as +inf;
/// log_eta is always finite. residual holds r_n = e(1+n)E_n(1) - 1 (n >= 1),
/// with eta_n = r_n Gamma(n); residual[0] is NaN.
struct MomentTable {
  int n_max = -1;
  Eigen::VectorXd eta;
  Eigen::VectorXd log_eta;
  Eigen::VectorXd residual;
  Eigen::VectorXd abs_err;
  std::vector<MomentRoute> route;

  bool overflow(int n) const;
  /// eta_n / n!, finite for every n.
  double eta_over_factorial(int n) const;
  /// eta_{n} / eta_{n-1} for n >= 1.
  double ratio(int n) const;
};

/// The sequence r_1..r_{n_max} from r_{n+1} = 1/(n+1) - (n+2) r_n / (n(n+1)),
/// seeded with r_1 = 2 e E1(1) - 1. Entry 0 is NaN.
Eigen::VectorXd residual_sequence(int n_max);

/// Moment by adaptive quadrature of the defining integral.
double eta_quadrature(int n, double tol = 1e-12);

/// Moment from the residual recurrence; +inf for n >= 171.
double eta_closed_form(int n);

/// log eta_n from the residual recurrence, any 0 <= n <= 10^4.
double log_eta_closed_form(int n);

/// Moment from the alternating binomial sum over Gamma(k-1, 1). Only for
/// n <= 25: the alternation costs about one bit per index.
double eta_binomial(int n);

/// Closed-form table with quadrature cross-check for n <= min(n_max, 60).
MomentTable eta_table(int n_max, double tol = 1e-12);

/// Closed-form table only (no quadrature), the route used by the kernel code.
MomentTable closed_form_table(int n_max);

/// Immutable closed-form table for n <= 4096, built on first use.
const MomentTable& shared_table();

/// Partial sum of eta_n / n! for n = 0..N.
double eta_factorial_sum(int N);

/// sum_n (-1)^n eta_n z^n / n! from the first N+1 coefficients.
///
/// The power series has radius of convergence 1 (eta_n / n! ~ 1/n^2) while
/// its closed form is analytic on C minus (-inf, -1]. Inside the disk the
/// truncated sum is used directly. Elsewhere the first 48 coefficients (or
/// N+1 if fewer) are turned into the equivalent Jacobi continued fraction,
/// the diagonal Pade approximant of this Stieltjes series, which converges on
/// the whole cut plane.
SeriesLimit<complex> generating_series(complex z, int N = 200);

inline complex generating_S(complex z, int N = 200) { return generating_series(z, N).value; }

/// Closed form 1 - (z+1) e^{z+1} E1(z+1), Re(z) > -1.
complex gfs_rhs(complex z);

/// (int_1^inf (u-1)^n e^{-u} / u du by quadrature, n! E_{n+1}(1)).
std::pair<double, double> techlemma_check(int n, double tol = 1e-12);

/// log of the Gamma-type bounds on eta_n: n!/(2^n 8) <= eta_n <= n!,
/// and eta_n <= Gamma(n)/n for n >= 1.
double log_lower_bound(int n);
double log_upper_bound(int n);
double log_sharp_upper_bound(int n);

}  // namespace hfs::moments
