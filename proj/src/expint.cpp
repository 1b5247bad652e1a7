#include "hfs/expint.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hfs/error.hpp"
#include "hfs/summation.hpp"

namespace hfs::expint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesRadius = 1.5;
constexpr int kMaxCfIterations = 20000;

template <class T>
T e1_series(T x) {
  using std::abs;
  using std::log;
  // E1(x) = -gamma - log x - sum_{n>=1} (-1)^n x^n / (n! n)
  CompensatedSum<T> acc;
  acc += T(-kEulerGamma);
  acc += -log(x);
  T power = T(1);
  for (int n = 1; n < 200; ++n) {
    power *= -x / double(n);  // (-x)^n / n!
    const T term = power / double(n);
    acc += -term;
    if (abs(term) < 0.25 * kEps * abs(acc.value())) break;
  }
  return acc.value();
}

// Modified Lentz evaluation of
// E_n(x) = exp(-x) / (x + n - 1*n/(x + n + 2 - 2(n+1)/(x + n + 4 - ...)))
template <class T>
T en_continued_fraction(int n, T x) {
  using std::abs;
  using std::exp;
  constexpr double tiny = 1e-300;
  T b = x + double(n);
  T c = T(1.0 / tiny);
  T d = T(1) / b;
  T h = d;
  for (int i = 1; i <= kMaxCfIterations; ++i) {
    const double a = -double(i) * double(n - 1 + i);
    b += 2.0;
    d = T(1) / (a * d + b);
    c = b + a / c;
    const T del = c * d;
    h *= del;
    if (abs(del - T(1)) <= kEps) return h * exp(-x);
  }
  throw AccuracyError("exponential integral continued fraction did not converge", 0.0, 0.0);
}

void require_positive(double x, const char* who) {
  if (!(x > 0.0)) throw DomainError(std::string(who) + ": argument must be > 0, got " + std::to_string(x));
}

}  // namespace

double e1(double x) {
  require_positive(x, "e1");
  if (x <= kSeriesRadius) return e1_series(x);
  return en_continued_fraction(1, x);
}

complex e1(complex z) {
  if (!(z.real() > 0.0)) throw DomainError("e1: complex argument needs Re(z) > 0");
  if (std::abs(z) <= kSeriesRadius) return e1_series(z);
  return en_continued_fraction(1, z);
}

ExpIntValue en_eval(int n, double x) {
  require_positive(x, "en");
  if (n < 0) throw DomainError("en: order must be >= 0 (use en_extended for negative orders)");
  ExpIntValue out{n, x, 0.0, Method::closed_form};
  if (n == 0) {
    out.value = std::exp(-x) / x;
    return out;
  }
  if (n == 1) {
    out.value = e1(x);
    out.method = x <= kSeriesRadius ? Method::series : Method::continued_fraction;
    return out;
  }
  if (x <= 1.0) {
    // Every step multiplies the inherited error by x / k <= 1.
    const double emx = std::exp(-x);
    double e = e1(x);
    for (int k = 1; k < n; ++k) e = (emx - x * e) / k;
    out.value = e;
    out.method = Method::recurrence;
    return out;
  }
  out.value = en_continued_fraction(n, x);
  out.method = Method::continued_fraction;
  return out;
}

std::vector<double> en_family(int n_max, double x) {
  require_positive(x, "en_family");
  if (n_max < 0 || n_max > 10000) throw ConfigError("en_family: n_max must lie in [0, 10000]");
  std::vector<double> e(static_cast<std::size_t>(n_max) + 1);
  const double emx = std::exp(-x);
  e[0] = emx / x;
  if (n_max == 0) return e;

  const int pivot = std::min(n_max, std::max(1, static_cast<int>(std::ceil(x))));
  e[pivot] = pivot == 1 ? e1(x) : en_continued_fraction(pivot, x);
  // Below the pivot k < x, so E_k = (exp(-x) - k E_{k+1}) / x contracts errors.
  for (int k = pivot - 1; k >= 1; --k) e[k] = (emx - k * e[k + 1]) / x;
  // Above the pivot k >= x, so E_{k+1} = (exp(-x) - x E_k) / k contracts errors.
  for (int k = pivot; k < n_max; ++k) e[k + 1] = (emx - x * e[k]) / k;
  return e;
}

double incomplete_gamma_int(int m, double x) {
  if (m < 1 || m > 170) throw ConfigError("incomplete_gamma_int: m must lie in [1, 170]");
  require_positive(x, "incomplete_gamma_int");
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j < m; ++j) {
    term *= x / j;
    sum += term;
  }
  return std::tgamma(static_cast<double>(m)) * std::exp(-x) * sum;
}

double en_extended(int n, double x) {
  if (n >= 0) return en(n, x);
  require_positive(x, "en_extended");
  return std::pow(x, n - 1) * incomplete_gamma_int(1 - n, x);
}

namespace detail {

double laplace_en_series(int n, double a) {
  // sum_{k>=0} (-a)^k / (k + n), |a| < 1
  CompensatedSum<double> acc;
  double power = 1.0;
  for (long k = 0; k < 10'000'000; ++k) {
    const double term = power / double(k + n);
    acc += term;
    if (std::abs(term) <= 0.25 * kEps * std::abs(acc.value())) return acc.value();
    power *= -a;
  }
  throw AccuracyError("laplace_en: series did not converge", acc.value(), 0.0);
}

double laplace_en_closed(int n, double a) {
  // ((-1)^(n-1) / a^n) (log(1+a) + sum_{k=1}^{n-1} (-a)^k / k)
  CompensatedSum<double> acc;
  acc += std::log1p(a);
  double power = 1.0;
  for (int k = 1; k < n; ++k) {
    power *= -a;
    acc += power / k;
  }
  const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * acc.value() / std::pow(a, n);
}

}  // namespace detail

double laplace_en(int n, double a) {
  if (n < 1) throw DomainError("laplace_en: order must be >= 1");
  if (!(a > -1.0)) throw DomainError("laplace_en: requires a > -1");
  if (a == 0.0) return 1.0 / n;
  // The closed form cancels badly for |a| < 1 and large n; the series is
  // geometric there. Near a = -1 the series slows down while the closed form
  // is dominated by log(1+a) and is safe.
  if (a > -0.99 && a < 1.0) return detail::laplace_en_series(n, a);
  return detail::laplace_en_closed(n, a);
}

}  // namespace hfs::expint
