#include "hfs/dbar.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hfs/error.hpp"
#include "hfs/numerics.hpp"
#include "hfs/summation.hpp"

namespace hfs::dbar {

PolyanalyticSeries PolyanalyticSeries::zeros(int order, int degree) {
  if (order < 1) throw ConfigError("PolyanalyticSeries: order must be >= 1");
  if (degree < 0) throw ConfigError("PolyanalyticSeries: degree must be >= 0");
  PolyanalyticSeries p;
  p.order = order;
  p.coeffs = Eigen::MatrixXcd::Zero(order, degree + 1);
  return p;
}

PolyanalyticSeries PolyanalyticSeries::from_entire(const EntireSeries& f) {
  PolyanalyticSeries p = zeros(1, std::max(0, f.degree()));
  if (f.coeffs.size() > 0) p.coeffs.row(0) = f.coeffs.transpose();
  return p;
}

complex eval_poly(const PolyanalyticSeries& f, complex z) {
  const complex zc = std::conj(z);
  complex zc_power = 1.0;
  CompensatedSum<complex> acc;
  for (int k = 0; k < f.order; ++k) {
    complex row = 0.0;
    for (Eigen::Index j = f.coeffs.cols() - 1; j >= 0; --j) row = row * z + f.coeffs(k, j);
    acc += zc_power * row;
    zc_power *= zc;
  }
  return acc.value();
}

PolyanalyticSeries dbar_symbolic(const PolyanalyticSeries& f) {
  const int degree = static_cast<int>(f.coeffs.cols()) - 1;
  if (f.order == 1) return PolyanalyticSeries::zeros(1, std::max(degree, 0));
  PolyanalyticSeries d = PolyanalyticSeries::zeros(f.order - 1, degree);
  for (int k = 1; k < f.order; ++k) d.coeffs.row(k - 1) = static_cast<double>(k) * f.coeffs.row(k);
  return d;
}

complex fock_poly_kernel(int n, complex z, complex w) {
  if (n < 1 || n > 20) throw ConfigError("fock_poly_kernel: order must lie in [1, 20]");
  const double d2 = std::norm(z - w);
  double sum = 0.0;
  double binom = n;  // C(n, 1)
  double power = 1.0;
  double fact = 1.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      binom = binom * (n - k) / (k + 1);  // C(n, k+1)
      power *= d2;
      fact *= k;
    }
    sum += (k % 2 == 0 ? 1.0 : -1.0) * binom * power / fact;
  }
  return std::exp(z * std::conj(w)) * sum;
}

PolyanalyticSeries assemble_solution(const EntireSeries& f, const EntireSeries& u0) {
  const int degree = std::max({0, f.degree(), u0.degree()});
  PolyanalyticSeries u = PolyanalyticSeries::zeros(2, degree);
  for (Eigen::Index j = 0; j < u0.coeffs.size(); ++j) u.coeffs(0, j) = u0.coeffs[j];
  for (Eigen::Index j = 0; j < f.coeffs.size(); ++j) u.coeffs(1, j) = f.coeffs[j];
  return u;
}

ResidualReport dbar_residual(const PolyanalyticSeries& u, const EntireSeries& f,
                             std::span<const complex> samples, double h, double tolerance) {
  if (!(h > 0.0 && h <= 1e-3)) throw ConfigError("dbar_residual: h must lie in (0, 1e-3]");
  ResidualReport rep;
  rep.h = h;
  rep.tolerance = tolerance;
  const PolyanalyticSeries du = dbar_symbolic(u);
  auto uf = [&u](complex z) { return eval_poly(u, z); };
  for (const complex& z : samples) {
    if (!(std::abs(z) <= 3.0)) throw DomainError("dbar_residual: samples must satisfy |z| <= 3");
    const complex fz = f(z);
    const double num = std::abs(numerics::wirtinger_dbar_fd(uf, z, h) - fz);
    const double sym = std::abs(eval_poly(du, z) - fz);
    rep.numeric.push_back(num);
    rep.numeric_max = std::max(rep.numeric_max, num);
    rep.symbolic_max = std::max(rep.symbolic_max, sym);
  }
  rep.pass = rep.numeric_max <= tolerance;
  return rep;
}

WeightM weight_M(const EntireSeries& f, Convention convention) {
  double hi = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(static_cast<std::size_t>(f.coeffs.size()));
  for (Eigen::Index n = 0; n < f.coeffs.size(); ++n) {
    const double a = std::abs(f.coeffs[n]);
    logs[n] = a == 0.0 ? -std::numeric_limits<double>::infinity() : std::lgamma(n + 1.0) + 2.0 * std::log(a);
    hi = std::max(hi, logs[n]);
  }
  WeightM m;
  if (!std::isfinite(hi)) {
    m.log_value = -std::numeric_limits<double>::infinity();
    return m;
  }
  CompensatedSum<double> acc;
  for (double l : logs) {
    if (std::isfinite(l)) acc += std::exp(l - hi);
  }
  m.log_value = hi + std::log(acc.value());
  if (convention == Convention::unnormalized) m.log_value += std::log(std::numbers::pi);
  // Linear value directly when every n! is representable, for full accuracy.
  if (f.degree() <= 170) {
    CompensatedSum<double> lin;
    for (Eigen::Index n = 0; n < f.coeffs.size(); ++n) lin += std::tgamma(n + 1.0) * std::norm(f.coeffs[n]);
    m.value = lin.value() * (convention == Convention::unnormalized ? std::numbers::pi : 1.0);
  } else {
    m.value = std::exp(m.log_value);
  }
  return m;
}

EntireSeries fw_series(complex w, int degree) {
  if (degree < 0 || degree > 10000) throw ConfigError("fw_series: degree must lie in [0, 10000]");
  EntireSeries s;
  s.coeffs.resize(degree + 1);
  const complex wc = std::conj(w);
  complex c = 1.0;
  for (int j = 0; j <= degree; ++j) {
    if (j > 0) c *= wc / static_cast<double>(j);
    s.coeffs[j] = c;
  }
  s.label = "F_w";
  return s;
}

double fw_weight_tail(complex w, int degree) {
  const double r2 = std::norm(w);
  if (r2 == 0.0) return 0.0;
  const int n = degree + 1;
  const double first = std::exp(n * std::log(r2) - std::lgamma(n + 1.0));
  const double q = r2 / (n + 1.0);
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return first / (1.0 - q);
}

HfpReport hfp_membership_check(const EntireSeries& u0, const EntireSeries& f) {
  HfpReport r;
  r.lhs = std::numbers::pi * std::max(0.0, hfock::h_inner(u0, u0).real());
  r.weight = weight_M(f, Convention::unnormalized).value;
  r.budget = 3.0 * r.weight;
  r.ratio = r.weight > 0.0 ? r.lhs / r.weight : (r.lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  r.member = r.lhs <= r.budget;
  return r;
}

}  // namespace hfs::dbar
