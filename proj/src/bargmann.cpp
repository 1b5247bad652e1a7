#include "hfs/bargmann.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hfs/error.hpp"
#include "hfs/moments.hpp"
#include "hfs/numerics.hpp"
#include "hfs/summation.hpp"

namespace hfs::bargmann {

namespace {

const moments::MomentTable& table() { return moments::shared_table(); }

void check_hermite_args(int n_max, double x) {
  if (n_max < 0 || n_max > 1000) throw ConfigError("hermite_psi: n_max must lie in [0, 1000]");
  if (!(std::abs(x) <= 40.0)) throw DomainError("hermite_psi: |x| must be <= 40");
}

}  // namespace

double pi_minus_quarter() { return std::pow(std::numbers::pi, -0.25); }

HermiteEval hermite_psi(int n_max, double x) {
  check_hermite_args(n_max, x);
  HermiteEval h;
  h.n_max = n_max;
  h.x = x;
  h.values.resize(n_max + 1);

  const bool scaled = std::abs(x) > 20.0;
  double log_scale = scaled ? -0.5 * x * x : 0.0;
  double prev = 0.0;
  double cur = scaled ? pi_minus_quarter() : pi_minus_quarter() * std::exp(-0.5 * x * x);
  // Fold the exponent in through the logarithm: exp(log_scale) alone may be subnormal.
  auto unscale = [&](double v) {
    return v == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(v)) + log_scale), v);
  };
  h.values[0] = scaled ? unscale(cur) : cur;
  for (int n = 0; n < n_max; ++n) {
    const double next = x * std::sqrt(2.0 / (n + 1.0)) * cur - std::sqrt(n / (n + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (scaled && std::abs(cur) > 0x1p+200) {
      cur = std::ldexp(cur, -200);
      prev = std::ldexp(prev, -200);
      log_scale += 200.0 * std::numbers::ln2;
    }
    h.values[n + 1] = scaled ? unscale(cur) : cur;
  }
  return h;
}

complex bargmann_A_truncated(complex z, double x, int N) {
  if (N < 0 || N > 1000) throw ConfigError("bargmann_A: truncation must lie in [0, 1000]");
  const HermiteEval psi = hermite_psi(N, x);
  const moments::MomentTable& t = table();
  CompensatedSum<complex> acc;
  complex c = 1.0 / std::sqrt(t.eta[0]);
  acc += c * psi.values[0];
  for (int n = 1; n <= N; ++n) {
    c *= z / std::sqrt(t.ratio(n));
    acc += c * psi.values[n];
  }
  return acc.value();
}

int bargmann_truncation(double r, double tol) {
  if (!(tol > 0.0)) throw ConfigError("bargmann_A: tol must be positive");
  if (r == 0.0) return 0;
  const double lr = std::log(std::sqrt(2.0) * r);
  const double target = std::log(tol);
  for (int n = 0; n <= 1000; ++n) {
    // Consecutive bound ratios are sqrt(2) r / sqrt(n + 2) <= 1/2 once n + 2 >= 8 r^2,
    // so the tail is at most twice its first term.
    if (n + 2.0 < 8.0 * r * r) continue;
    const double log_first = 0.5 * std::log(8.0) + (n + 1) * lr - 0.5 * std::lgamma(n + 2.0);
    if (std::log(2.0) + log_first < target) return n;
  }
  throw PrecisionError("bargmann_A: no admissible truncation below 1000");
}

complex bargmann_A(complex z, double x, double tol) {
  if (!(std::abs(z) <= 10.0)) throw DomainError("bargmann_A: |z| must be <= 10");
  return bargmann_A_truncated(z, x, bargmann_truncation(std::abs(z), tol));
}

double l2_norm_A_sq(complex z, int quad_nodes, int trunc) {
  if (!(std::abs(z) <= 2.0)) throw DomainError("l2_norm_A_sq: |z| must be <= 2");
  if (quad_nodes < 100) throw ConfigError("l2_norm_A_sq: need at least 100 quadrature nodes");
  if (trunc < 40) throw ConfigError("l2_norm_A_sq: truncation must be >= 40");
  const numerics::QuadratureRule rule = numerics::gauss_hermite_rule(quad_nodes);
  CompensatedSum<double> acc;
  for (Eigen::Index i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    // The Gauss weight exp(-x^2) is already inside |A|^2; undo it in log space.
    const double w = std::exp(rule.log_weights[i] + x * x);
    acc += w * std::norm(bargmann_A_truncated(z, x, trunc));
  }
  return acc.value();
}

std::pair<complex, complex> weighted_gf_pair(complex z, double x, int N, double tol) {
  if (!(std::abs(z) <= 2.0)) throw DomainError("weighted_gf_pair: |z| must be <= 2");
  if (!(std::abs(x) <= 5.0)) throw DomainError("weighted_gf_pair: |x| must be <= 5");
  if (z != 0.0 && std::abs(std::arg(z)) > 0.25 * std::numbers::pi + 1e-12) {
    throw DomainError("weighted_gf_pair: requires |arg z| <= pi/4");
  }
  if (N < 0 || N > 1000) throw ConfigError("weighted_gf_pair: truncation must lie in [0, 1000]");

  const HermiteEval psi = hermite_psi(N, x);
  const moments::MomentTable& t = table();
  CompensatedSum<complex> lhs;
  complex power = 1.0;
  for (int n = 0; n <= N; ++n) {
    lhs += std::exp(t.log_eta[n] - 0.5 * std::lgamma(n + 1.0)) * power * psi.values[n];
    power *= z;
  }

  const complex b = std::sqrt(2.0) * z * x - 1.0;
  const complex z2 = z * z;
  auto integrand = [&](double s) -> complex {
    return std::exp(-0.5 * z2 * s * s + b * s) / ((1.0 + s) * (1.0 + s));
  };
  const complex integral = numerics::integrate_semi_infinite(integrand, tol).value;
  const complex rhs = pi_minus_quarter() * std::exp(-0.5 * x * x) * integral;
  return {lhs.value(), rhs};
}

complex classical_gf_unnormalized(complex z, double x) {
  return std::exp(-0.5 * (z * z + x * x) + std::sqrt(2.0) * z * x);
}

std::pair<complex, complex> classical_gf_check(complex z, double x, int N) {
  if (!(std::abs(z) <= 3.0)) throw DomainError("classical_gf_check: |z| must be <= 3");
  if (!(std::abs(x) <= 5.0)) throw DomainError("classical_gf_check: |x| must be <= 5");
  const HermiteEval psi = hermite_psi(N, x);
  CompensatedSum<complex> lhs;
  complex c = 1.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) c *= z / std::sqrt(static_cast<double>(n));
    lhs += c * psi.values[n];
  }
  return {lhs.value(), pi_minus_quarter() * classical_gf_unnormalized(z, x)};
}

}  // namespace hfs::bargmann
