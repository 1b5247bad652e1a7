#pragma once

#include <Eigen/Core>
#include <complex>
#include <utility>

namespace hfs::bargmann {

using complex = std::complex<double>;

/// psi_0(x) .. psi_{n_max}(x), orthonormal in L^2(R).
struct HermiteEval {
  int n_max = 0;
  double x = 0.0;
  Eigen::VectorXd values;
};

/// Three-term recurrence from psi_0 = pi^{-1/4} e^{-x^2/2}. For |x| > 20 the
/// Gaussian factor is carried as a separate exponent until the end so the
/// recurrence does not start from an underflowed value. n_max <= 1000, |x| <= 40.
HermiteEval hermite_psi(int n_max, double x);

/// pi^{-1/4}.
double pi_minus_quarter();

/// Truncated A(z, x) = sum_{n<=N} z^n / sqrt(eta_n) psi_n(x).
complex bargmann_A_truncated(complex z, double x, int N);

/// Degree needed for |tail| < tol, from 1/sqrt(eta_n) <= sqrt(8) sqrt(2)^n / sqrt(n!)
/// and |psi_n| <= 1.
int bargmann_truncation(double r, double tol);

/// A(z, x) with certified tail below tol. |z| <= 10.
complex bargmann_A(complex z, double x, double tol = 1e-12);

/// int |A_N(z, x)|^2 dx by Gauss-Hermite with quad_nodes nodes on the degree-`trunc`
/// series. |z| <= 2, quad_nodes >= 100, trunc >= 40.
double l2_norm_A_sq(complex z, int quad_nodes = 200, int trunc = 60);

/// (sum_{n<=N} eta_n / sqrt(n!) z^n psi_n(x),
///  pi^{-1/4} e^{-x^2/2} int_0^inf exp(-z^2 t^2 / 2 + (sqrt2 z x - 1) t) (1+t)^{-2} dt).
///
/// The coefficients grow like sqrt(n!) / n^2, so the left side is an asymptotic
/// expansion of the right side in z rather than a convergent series: the two
/// agree to O(|z|^{N+1}) for small z only. |z| <= 2, |x| <= 5, N >= 0,
/// |arg z| <= pi/4.
std::pair<complex, complex> weighted_gf_pair(complex z, double x, int N = 60, double tol = 1e-12);

/// (sum_{n<=N} z^n / sqrt(n!) psi_n(x), pi^{-1/4} exp(-(z^2 + x^2)/2 + sqrt2 z x)).
/// |z| <= 3, |x| <= 5.
std::pair<complex, complex> classical_gf_check(complex z, double x, int N = 120);

/// exp(-(z^2 + x^2)/2 + sqrt2 z x), the generating function for the Hermite
/// functions normalised to L^2 norm pi^{1/4}.
complex classical_gf_unnormalized(complex z, double x);

}  // namespace hfs::bargmann
