#include "hfs/hfock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "hfs/moments.hpp"
#include "hfs/summation.hpp"

namespace hfs::hfock {

namespace {

const moments::MomentTable& table() { return moments::shared_table(); }

void check_degree(const EntireSeries& f, int limit, const char* who) {
  if (f.degree() > limit) {
    throw ConfigError(std::string(who) + ": degree " + std::to_string(f.degree()) + " exceeds " +
                      std::to_string(limit));
  }
}

double log_abs(complex c) { return c == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::abs(c)); }

}  // namespace

complex EntireSeries::operator()(complex z) const {
  complex acc = 0.0;
  for (Eigen::Index n = coeffs.size() - 1; n >= 0; --n) acc = acc * z + coeffs[n];
  return acc;
}

EntireSeries EntireSeries::from(std::vector<complex> c, std::string label) {
  if (c.size() > 10001) throw ConfigError("EntireSeries: degree must be <= 10000");
  EntireSeries s;
  s.coeffs = Eigen::Map<const Eigen::VectorXcd>(c.data(), static_cast<Eigen::Index>(c.size()));
  s.label = std::move(label);
  return s;
}

EntireSeries EntireSeries::monomial(int n, complex c) {
  if (n < 0 || n > 10000) throw ConfigError("EntireSeries: degree must lie in [0, 10000]");
  EntireSeries s;
  s.coeffs = Eigen::VectorXcd::Zero(n + 1);
  s.coeffs[n] = c;
  s.label = "z^" + std::to_string(n);
  return s;
}

EntireSeries EntireSeries::basis(int n) {
  if (n < 0 || n > table().n_max) throw ConfigError("EntireSeries::basis: index out of range");
  EntireSeries s = monomial(n, std::exp(-0.5 * table().log_eta[n]));
  s.label = "e_" + std::to_string(n);
  return s;
}

int truncation_index(double r, double tol) {
  if (!(tol > 0.0)) throw ConfigError("eval_E: tol must be positive");
  if (r == 0.0) return 0;
  const double target = std::log(tol) + std::max(0.0, r);
  const double lr2 = std::log(2.0 * r);
  const int limit = table().n_max - 1;
  for (int n = 0; n <= limit; ++n) {
    const double log_tail = std::log(8.0) + (n + 1) * lr2 - std::lgamma(n + 2.0) + 2.0 * r;
    if (log_tail < target) return n;
  }
  throw PrecisionError("eval_E: |z| too large for the moment table");
}

complex eval_E(complex z, double tol) {
  const int N = truncation_index(std::abs(z), tol);
  const moments::MomentTable& t = table();
  CompensatedSum<complex> acc;
  complex term = 1.0 / t.eta[0];
  acc += term;
  for (int n = 1; n <= N; ++n) {
    term *= z / t.ratio(n);
    acc += term;
  }
  return acc.value();
}

complex kernel_K(complex z, complex w, double tol, bool normalized) {
  const complex v = eval_E(z * std::conj(w), tol);
  return normalized ? table().eta[0] * v : v;
}

complex h_inner(const EntireSeries& f, const EntireSeries& g) {
  const Eigen::Index n = std::min(f.coeffs.size(), g.coeffs.size());
  if (n == 0) return 0.0;
  if (n - 1 > table().n_max) throw ConfigError("h_inner: degree exceeds the moment table");
  const moments::MomentTable& t = table();

  std::vector<double> logs(static_cast<std::size_t>(n));
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double l = t.log_eta[k] + log_abs(f.coeffs[k]) + log_abs(g.coeffs[k]);
    logs[k] = l;
    if (std::isfinite(l)) {
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
  }
  if (!std::isfinite(hi)) return 0.0;

  const bool plain = hi - lo <= 300.0 * std::numbers::ln10 && hi < 700.0 && n - 1 <= 170;
  CompensatedSum<complex> acc;
  if (plain) {
    for (Eigen::Index k = 0; k < n; ++k) acc += t.eta[k] * f.coeffs[k] * std::conj(g.coeffs[k]);
    return acc.value();
  }
  // Magnitude/phase form, scaled by the largest term.
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!std::isfinite(logs[k])) continue;
    const complex phase = f.coeffs[k] * std::conj(g.coeffs[k]) /
                          (std::abs(f.coeffs[k]) * std::abs(g.coeffs[k]));
    acc += std::exp(logs[k] - hi) * phase;
  }
  return std::exp(hi) * acc.value();
}

double h_norm(const EntireSeries& f) { return std::sqrt(std::max(0.0, h_inner(f, f).real())); }

double fock_norm(const EntireSeries& f) {
  double hi = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(static_cast<std::size_t>(f.coeffs.size()));
  for (Eigen::Index n = 0; n < f.coeffs.size(); ++n) {
    logs[n] = std::lgamma(n + 1.0) + 2.0 * log_abs(f.coeffs[n]);
    hi = std::max(hi, logs[n]);
  }
  if (!std::isfinite(hi)) return 0.0;
  CompensatedSum<double> acc;
  for (double l : logs) {
    if (std::isfinite(l)) acc += std::exp(l - hi);
  }
  return std::exp(0.5 * (hi + std::log(acc.value())));
}

double norm_by_quadrature(const EntireSeries& f, double tol) {
  check_degree(f, 50, "norm_by_quadrature");
  CompensatedSum<double> acc;
  for (Eigen::Index n = 0; n < f.coeffs.size(); ++n) {
    const double a2 = std::norm(f.coeffs[n]);
    if (a2 != 0.0) acc += a2 * moments::eta_quadrature(static_cast<int>(n), tol);
  }
  return acc.value();
}

EntireSeries kernel_section(complex z, int n) {
  if (n < 0 || n > table().n_max) throw ConfigError("kernel_section: degree out of range");
  EntireSeries s;
  s.coeffs.resize(n + 1);
  const complex zc = std::conj(z);
  complex power = 1.0;
  for (int k = 0; k <= n; ++k) {
    s.coeffs[k] = power / table().eta[k];
    power *= zc;
  }
  s.label = "K_z";
  return s;
}

std::pair<complex, complex> reproducing_check(const EntireSeries& f, complex z) {
  check_degree(f, 1000, "reproducing_check");
  if (f.degree() > 170) {
    // eta_n overflows; <f, K_z> = sum a_n z^n term by term.
    CompensatedSum<complex> acc;
    complex power = 1.0;
    for (Eigen::Index n = 0; n < f.coeffs.size(); ++n) {
      acc += f.coeffs[n] * power;
      power *= z;
    }
    return {acc.value(), f(z)};
  }
  return {h_inner(f, kernel_section(z, f.degree())), f(z)};
}

PointwiseReport pointwise_bound_check(const EntireSeries& f, complex z) {
  PointwiseReport r;
  r.lhs = std::abs(f(z));
  r.rhs = std::sqrt(eval_E(std::norm(z), 1e-12).real()) * h_norm(f);
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-10);
  return r;
}

GramMatrix gram_K(std::span<const complex> points, double tol) {
  return make_gram(
      points, [tol](complex z, complex w) { return kernel_K(z, w, tol); },
      [tol](complex z) { return eval_E(std::norm(z), tol).real(); });
}

Membership membership(const EntireSeries& f) {
  Membership m;
  m.h_norm = h_norm(f);
  m.fock_norm = fock_norm(f);
  m.ratio = m.fock_norm > 0.0 ? m.h_norm / m.fock_norm : 0.0;
  const moments::MomentTable& t = table();
  m.contributions.resize(f.coeffs.size());
  for (Eigen::Index n = 0; n < f.coeffs.size(); ++n) {
    m.contributions[n] = std::exp(t.log_eta[n] + 2.0 * log_abs(f.coeffs[n]));
  }
  return m;
}

StreamReport classify_stream(std::span<const complex> coeffs, int window) {
  if (window < 4) throw ConfigError("classify_stream: window must be >= 4");
  const moments::MomentTable& t = table();
  if (static_cast<int>(coeffs.size()) - 1 > t.n_max) throw ConfigError("classify_stream: stream too long");
  StreamReport rep;
  const auto n = static_cast<Eigen::Index>(coeffs.size());
  rep.partial_sums.resize(n);
  std::vector<double> logs(coeffs.size());
  CompensatedSum<double> acc;
  for (Eigen::Index k = 0; k < n; ++k) {
    logs[k] = t.log_eta[k] + 2.0 * log_abs(coeffs[k]);
    acc += std::exp(logs[k]);
    rep.partial_sums[k] = acc.value();
  }
  if (n < window + 1) return rep;

  // Window [n - window, n), restricted to nonzero contributions.
  std::vector<double> xs, ys;
  for (Eigen::Index k = n - window; k < n; ++k) {
    if (k >= 1 && std::isfinite(logs[k])) {
      xs.push_back(std::log(static_cast<double>(k)));
      ys.push_back(logs[k]);
    }
  }
  if (xs.size() < 4) return rep;
  rep.log_ratio = (ys.back() - ys.front()) / (std::exp(xs.back()) - std::exp(xs.front()));

  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  rep.power_slope = sxx > 0.0 ? sxy / sxx : 0.0;

  if (rep.log_ratio < -0.05) {
    rep.growth = Growth::converging;
  } else if (rep.log_ratio > 0.05) {
    rep.growth = Growth::diverging;
  } else if (rep.power_slope < -1.2) {
    rep.growth = Growth::converging;
  } else if (rep.power_slope > -0.8) {
    rep.growth = Growth::diverging;
  }
  return rep;
}

}  // namespace hfs::hfock
