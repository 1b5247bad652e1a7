#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace hfs::expint {

using complex = std::complex<double>;

inline constexpr double kEulerGamma = std::numbers::egamma;

enum class Method { series, continued_fraction, recurrence, closed_form };

/// A single exponential-integral evaluation with the route that produced it.
struct ExpIntValue {
  int order = 1;
  double argument = 0.0;
  double value = 0.0;
  Method method = Method::closed_form;
};

/// E1(x) for real x > 0. Power series for x <= 1.5, continued fraction beyond.
double e1(double x);

/// E1(z) for Re(z) > 0 (principal branch).
complex e1(complex z);

/// E_n(x) for n >= 0, x > 0, with the route used.
ExpIntValue en_eval(int n, double x);

inline double en(int n, double x) { return en_eval(n, x).value; }

/// E_0(x) .. E_{n_max}(x) in a single pass: E_m at m = ceil(x) from the
/// continued fraction, then forward recurrence above m and backward below,
/// both of which contract rounding errors.
std::vector<double> en_family(int n_max, double x);

/// E_n(x) extended to n <= 0 through E_n(x) = x^(n-1) Gamma(1-n, x).
double en_extended(int n, double x);

/// Upper incomplete gamma Gamma(m, x) for integer 1 <= m <= 170.
double incomplete_gamma_int(int m, double x);

/// Integral of exp(-a t) E_n(t) over (0, inf) for a > -1; returns 1/n at a = 0.
double laplace_en(int n, double a);

namespace detail {
// The two branches of laplace_en, exposed so their overlap can be tested.
double laplace_en_series(int n, double a);
double laplace_en_closed(int n, double a);
}  // namespace detail

}  // namespace hfs::expint
