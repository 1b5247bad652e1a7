#include "hfs/moments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "hfs/error.hpp"
#include "hfs/expint.hpp"
#include "hfs/numerics.hpp"

namespace hfs::moments {

namespace {

constexpr int kMaxIndex = 10000;
constexpr int kLinearLimit = 170;
constexpr int kQuadratureCheckLimit = 60;
// Nodes of the Gauss rule behind the continued fraction. Past about 26 the
// Chebyshev algorithm runs out of precision even in binary128.
constexpr int kJacobiNodes = 24;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_index(int n, int limit, const char* who) {
  if (n < 0 || n > limit) {
    throw ConfigError(std::string(who) + ": index must lie in [0, " + std::to_string(limit) + "]");
  }
}

double eta0_closed() { return std::fma(-std::numbers::e, expint::e1(1.0), 1.0); }

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
#else
using wide = long double;
#endif

struct Jacobi {
  std::vector<double> alpha, beta;
};

// eta_n / n! = e (E_n(1) - E_{n+1}(1)) are the moments of a positive measure on
// [0, 1], so sum (-1)^n eta_n z^n / n! = integral dsigma(x) / (1 + z x). The
// Chebyshev algorithm turns the moments into the recurrence coefficients of
// the orthogonal polynomials of sigma, i.e. the diagonal Pade approximant as
// a J-fraction. The map is badly conditioned so it runs in binary128.
Jacobi jacobi_from_moments(int nodes) {
  Jacobi j;
  if (nodes < 1) return j;
  const wide e = wide(2.718281828459045) + wide(1.4456468917292502e-16);
  const wide gamma = wide(0.5772156649015329) + wide(-4.942915152430645e-18);
  // E_1(1) = -gamma + sum_k (-1)^(k+1) / (k k!)
  wide e1 = -gamma, term = 1;
  for (int k = 1; k <= 40; ++k) {
    term /= k;
    e1 += (k % 2 == 1 ? term : -term) / k;
  }
  const std::size_t m = 2 * static_cast<std::size_t>(nodes);
  std::vector<wide> mu(m);
  mu[0] = 1 - e * e1;
  wide en = e1;  // E_n(1), forward recurrence is stable here
  for (std::size_t n = 1; n < m; ++n) {
    const wide inv = wide(1) / wide(static_cast<double>(n));
    mu[n] = e * en * (1 + inv) - inv;
    en = (1 / e - en) * inv;
  }

  std::vector<wide> a{mu[1] / mu[0]}, b{mu[0]};
  std::vector<wide> prev(m, 0), cur = mu, next(m, 0);
  for (int k = 1; k < nodes; ++k) {
    const std::size_t kk = static_cast<std::size_t>(k);
    for (std::size_t l = kk; l < m - kk; ++l) next[l] = cur[l + 1] - a[kk - 1] * cur[l] - b[kk - 1] * prev[l];
    a.push_back(next[kk + 1] / next[kk] - cur[kk] / cur[kk - 1]);
    b.push_back(next[kk] / cur[kk - 1]);
    if (!(b.back() > 0)) throw PrecisionError("generating_S: Chebyshev algorithm lost positivity");
    prev.swap(cur);
    cur.swap(next);
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    j.alpha.push_back(static_cast<double>(a[k]));
    j.beta.push_back(static_cast<double>(b[k]));
  }
  return j;
}

const Jacobi& shared_jacobi() {
  static const Jacobi j = jacobi_from_moments(kJacobiNodes);
  return j;
}

}  // namespace

std::string_view to_string(MomentRoute route) {
  switch (route) {
    case MomentRoute::quadrature: return "quadrature";
    case MomentRoute::closed_form: return "closed-form";
    case MomentRoute::binomial: return "binomial";
  }
  return "unknown";
}

bool MomentTable::overflow(int n) const { return !std::isfinite(eta[n]); }

double MomentTable::eta_over_factorial(int n) const {
  return n == 0 ? eta[0] : residual[n] / n;
}

double MomentTable::ratio(int n) const {
  if (n == 1) return eta[1] / eta[0];
  return (n - 1) * residual[n] / residual[n - 1];
}

Eigen::VectorXd residual_sequence(int n_max) {
  check_index(n_max, kMaxIndex, "residual_sequence");
  Eigen::VectorXd r(n_max + 1);
  r[0] = kNaN;
  if (n_max == 0) return r;
  r[1] = std::fma(2.0 * std::numbers::e, expint::e1(1.0), -1.0);
  for (int n = 1; n < n_max; ++n) {
    const double nn = n;
    r[n + 1] = 1.0 / (nn + 1.0) - (nn + 2.0) * r[n] / (nn * (nn + 1.0));
  }
  return r;
}

double eta_quadrature(int n, double tol) {
  check_index(n, 400, "eta_quadrature");
  if (n == 0) {
    return numerics::integrate_semi_infinite(
               [](double t) { return std::exp(-t) / ((1.0 + t) * (1.0 + t)); }, tol)
        .value;
  }
  const double nn = n;
  auto integrand = [nn](double t) {
    if (t <= 0.0) return 0.0;
    return std::exp(nn * std::log(t) - t - 2.0 * std::log1p(t));
  };
  return numerics::integrate_semi_infinite(integrand, tol).value;
}

double eta_closed_form(int n) {
  check_index(n, kMaxIndex, "eta_closed_form");
  if (n == 0) return eta0_closed();
  if (n > kLinearLimit) return std::numeric_limits<double>::infinity();
  const Eigen::VectorXd r = residual_sequence(n);
  return r[n] * std::tgamma(static_cast<double>(n));
}

double log_eta_closed_form(int n) {
  check_index(n, kMaxIndex, "log_eta_closed_form");
  if (n == 0) return std::log(eta0_closed());
  const Eigen::VectorXd r = residual_sequence(n);
  return std::log(r[n]) + std::lgamma(static_cast<double>(n));
}

double eta_binomial(int n) {
  if (n < 0) throw ConfigError("eta_binomial: index must be >= 0");
  if (n > 25) throw PrecisionError("eta_binomial: alternating sum unsupported beyond n = 25");
  // eta_n = e sum_k (-1)^(n-k) C(n,k) E_{2-k}(1), E_{2-k}(1) = Gamma(k-1, 1)
  CompensatedSum<double> acc;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;  // exact for n <= 25
    double ek = 0.0;
    if (k == 0) {
      ek = expint::en(2, 1.0);
    } else if (k == 1) {
      ek = expint::e1(1.0);
    } else {
      ek = expint::incomplete_gamma_int(k - 1, 1.0);
    }
    const double sign = (n - k) % 2 == 0 ? 1.0 : -1.0;
    const double p = sign * binom * ek;
    acc += p;
    acc += std::fma(sign * binom, ek, -p);
  }
  return std::numbers::e * acc.value();
}

MomentTable closed_form_table(int n_max) {
  check_index(n_max, kMaxIndex, "closed_form_table");
  MomentTable t;
  t.n_max = n_max;
  t.residual = residual_sequence(n_max);
  t.eta.resize(n_max + 1);
  t.log_eta.resize(n_max + 1);
  t.abs_err.resize(n_max + 1);
  t.route.assign(n_max + 1, MomentRoute::closed_form);

  t.eta[0] = eta0_closed();
  t.log_eta[0] = std::log(t.eta[0]);
  t.abs_err[0] = 4.0 * kEps * t.eta[0];
  for (int n = 1; n <= n_max; ++n) {
    const double lg = std::lgamma(static_cast<double>(n));
    t.log_eta[n] = std::log(t.residual[n]) + lg;
    if (n <= kLinearLimit) {
      t.eta[n] = t.residual[n] * std::tgamma(static_cast<double>(n));
      // r_1 carries ~8 ulp; the recurrence contracts it by ~1/n per step.
      t.abs_err[n] = 16.0 * kEps * t.eta[n];
    } else {
      t.eta[n] = std::numeric_limits<double>::infinity();
      t.abs_err[n] = std::numeric_limits<double>::infinity();
    }
  }
  return t;
}

MomentTable eta_table(int n_max, double tol) {
  MomentTable t = closed_form_table(n_max);
  const int check = std::min(n_max, kQuadratureCheckLimit);
  for (int n = 0; n <= check; ++n) {
    t.abs_err[n] = std::abs(eta_quadrature(n, tol) - t.eta[n]);
  }
  return t;
}

const MomentTable& shared_table() {
  static const MomentTable table = closed_form_table(4096);
  return table;
}

double eta_factorial_sum(int N) {
  check_index(N, kMaxIndex, "eta_factorial_sum");
  const MomentTable& t = N <= shared_table().n_max ? shared_table() : closed_form_table(N);
  // Add from the smallest term up.
  CompensatedSum<double> acc;
  for (int n = N; n >= 0; --n) acc += t.eta_over_factorial(n);
  return acc.value();
}

SeriesLimit<complex> generating_series(complex z, int N) {
  if (!(z.real() > -1.0)) throw DomainError("generating_S: requires Re(z) > -1");
  check_index(N, kMaxIndex, "generating_S");
  const MomentTable& t = N <= shared_table().n_max ? shared_table() : closed_form_table(N);

  const double r = std::abs(z);
  SeriesLimit<complex> out;
  // eta_n / n! <= 1/n^2, so the tail after N is below r^(N+1) / ((N+1)^2 (1-r)).
  if (r < 1.0) {
    const double tail = std::pow(r, N + 1) / ((N + 1.0) * (N + 1.0) * (1.0 - r));
    if (tail <= 1e-15) {
      CompensatedSum<complex> acc;
      complex power(1.0, 0.0);
      for (int n = 0; n <= N; ++n) {
        acc += power * t.eta_over_factorial(n);
        power *= -z;
      }
      out.value = acc.value();
      out.error_estimate = tail;
      out.converged = true;
      return out;
    }
  }

  const auto& [alpha, beta] = N + 1 >= 2 * kJacobiNodes ? shared_jacobi() : jacobi_from_moments((N + 1) / 2);
  if (alpha.empty()) throw DomainError("generating_S: need at least two coefficients outside the unit disk");
  // Backward evaluation of beta_0 / (1 + z a_0 - z^2 b_1 / (1 + z a_1 - ...)).
  auto fraction = [&](std::size_t n) {
    complex u = 1.0 + z * alpha[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) u = 1.0 + z * alpha[k] - z * z * beta[k + 1] / u;
    return beta[0] / u;
  };
  const std::size_t n = alpha.size();
  out.value = fraction(n);
  out.error_estimate = n > 4 ? std::abs(out.value - fraction(n - 4)) : std::numeric_limits<double>::infinity();
  out.converged = std::isfinite(out.error_estimate);
  return out;
}

complex gfs_rhs(complex z) {
  if (!(z.real() > -1.0)) throw DomainError("gfs_rhs: requires Re(z) > -1");
  const complex w = z + 1.0;
  return 1.0 - w * std::exp(w) * expint::e1(w);
}

std::pair<double, double> techlemma_check(int n, double tol) {
  check_index(n, 60, "techlemma_check");
  const double nn = n;
  auto integrand = [nn](double t) {
    const double lt = nn == 0.0 ? 0.0 : nn * std::log(t);
    return std::exp(lt - t - 1.0 - std::log1p(t));
  };
  const double lhs = numerics::integrate_semi_infinite(integrand, tol).value;
  const double rhs = std::tgamma(nn + 1.0) * expint::en(n + 1, 1.0);
  return {lhs, rhs};
}

double log_lower_bound(int n) {
  return std::lgamma(n + 1.0) - n * std::numbers::ln2 - std::log(8.0);
}

double log_upper_bound(int n) { return std::lgamma(n + 1.0); }

double log_sharp_upper_bound(int n) {
  if (n < 1) throw ConfigError("log_sharp_upper_bound: requires n >= 1");
  return std::lgamma(static_cast<double>(n)) - std::log(static_cast<double>(n));
}

}  // namespace hfs::moments
