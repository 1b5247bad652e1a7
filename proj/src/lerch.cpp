#include "hfs/lerch.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "hfs/error.hpp"
#include "hfs/expint.hpp"
#include "hfs/moments.hpp"
#include "hfs/numerics.hpp"
#include "hfs/random.hpp"
#include "hfs/summation.hpp"

namespace hfs::lerch {

namespace {

constexpr long kMaxTerms = 100'000'000;
constexpr double kCmSlack = 1e-10;

void check_order(int n) {
  if (n < 1) throw DomainError("phi: order must be >= 1");
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw ConfigError("lerch: tol must be positive");
}

void check_disk(complex z, const char* who) {
  if (!(std::abs(z) <= kDiskLimit)) {
    throw DomainError(std::string(who) +
                      ": |z| must be <= 1 - 1e-6; closer to the unit circle use the integral "
                      "representation (lerch_phi_integral)");
  }
}

// sum_k z^k c_k with |c_k| <= c_bound(k) decreasing; stops once the geometric
// tail bound |z|^(k+1) c_bound(k+1) / (1 - |z|) is below tol |sum|.
template <class Coef, class Bound>
complex disk_series(complex z, double tol, Coef&& coef, Bound&& bound) {
  const double r = std::abs(z);
  CompensatedSum<complex> acc;
  complex power = 1.0;
  double rpow = 1.0;
  for (long k = 0; k < kMaxTerms; ++k) {
    acc += power * coef(k);
    power *= z;
    rpow *= r;
    const double tail = rpow * bound(k + 1) / (1.0 - r);
    if (tail <= tol * std::abs(acc.value()) || rpow == 0.0) return acc.value();
  }
  throw AccuracyError("lerch: disk series did not converge", std::abs(acc.value()), 0.0);
}

}  // namespace

complex log1p(complex w) {
  const double x = w.real();
  const double y = w.imag();
  return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

complex phi(int n, complex z, double tol) {
  check_order(n);
  check_tol(tol);
  if (z == 0.0) return 1.0 / n;
  if (z.imag() == 0.0 && z.real() <= -0.5) return expint::laplace_en(n, -z.real());
  check_disk(z, "phi");
  const double nn = n;
  return disk_series(
      z, tol, [nn](long k) { return 1.0 / (k + nn); }, [nn](long k) { return 1.0 / (k + nn); });
}

complex phi_tilde(int n, complex z, double tol) { return static_cast<double>(n) * phi(n, z, tol); }

complex lerch_phi(complex z, double s, double a, double tol) {
  if (!(s > 0.0)) throw DomainError("lerch_phi: s must be > 0");
  if (!(a > 0.0)) throw DomainError("lerch_phi: a must be > 0");
  check_tol(tol);
  check_disk(z, "lerch_phi");
  if (z == 0.0) return std::pow(a, -s);
  auto c = [s, a](long k) { return std::pow(k + a, -s); };
  return disk_series(z, tol, c, c);
}

complex lerch_phi_integral(complex z, double s, double a, double tol) {
  if (!(s >= 1.0)) throw DomainError("lerch_phi_integral: requires s >= 1");
  if (!(a > 0.0)) throw DomainError("lerch_phi_integral: a must be > 0");
  check_disk(z, "lerch_phi_integral");
  auto integrand = [=](double t) -> complex {
    const double lt = s == 1.0 ? 0.0 : (s - 1.0) * std::log(t);
    return std::exp(lt - a * t) / (1.0 - z * std::exp(-t));
  };
  return numerics::integrate_semi_infinite(integrand, tol).value / std::tgamma(s);
}

double hurwitz_zeta(double s, double a, double tol) {
  if (!(s > 1.0 + 1e-6)) throw DomainError("hurwitz_zeta: requires s > 1 + 1e-6");
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta: a must be > 0");
  check_tol(tol);
  // zeta(s, a) >= a^{-s}; ask for a tail-rule error ten times below tol times that.
  const double budget = 0.1 * tol * std::pow(a, -s);
  const double reach = std::pow(s / (24.0 * budget), 1.0 / (s + 1.0));
  const double k_real = std::max(1.0, std::ceil(reach + 0.5 - a));
  if (k_real > 1e8) throw PrecisionError("hurwitz_zeta: s too close to 1 for the requested tol");
  const long K = static_cast<long>(k_real);
  CompensatedSum<double> acc;
  acc += std::pow(K - 0.5 + a, 1.0 - s) / (s - 1.0);
  for (long k = K - 1; k >= 0; --k) acc += std::pow(k + a, -s);
  return acc.value();
}

double hurwitz_zeta_integral(double s, double a, double tol) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta_integral: requires s > 1");
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta_integral: a must be > 0");
  auto integrand = [=](double t) { return std::exp((s - 1.0) * std::log(t) - a * t) / -std::expm1(-t); };
  return numerics::integrate_semi_infinite(integrand, tol).value / std::tgamma(s);
}

std::pair<complex, complex> dirichlet_identity_check(complex z, complex w) {
  const complex zeta = z * std::conj(w);
  const double r = std::abs(zeta);
  if (!(r > 0.0) || !(r <= kDiskLimit)) {
    throw DomainError("dirichlet_identity_check: requires 0 < |z conj w| <= 1 - 1e-6");
  }
  return {phi(1, zeta), -log1p(-zeta) / zeta};
}

std::vector<double> uniform_grid(double lo, double h, int count) {
  std::vector<double> g(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) g[i] = lo + i * h;
  return g;
}

CmReport cm_differences(std::span<const double> values, int max_order) {
  if (max_order < 0 || max_order > 8) throw ConfigError("cm_evidence: order must lie in [0, 8]");
  if (values.size() <= static_cast<std::size_t>(max_order)) {
    throw ConfigError("cm_evidence: grid has fewer points than order + 1");
  }
  CmReport rep;
  rep.max_order = max_order;
  std::vector<double> d(values.begin(), values.end());
  double sign = 1.0;
  for (int j = 0; j <= max_order; ++j) {
    if (j > 0) {
      for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
      d.pop_back();
      sign = -sign;
    }
    double lo = std::numeric_limits<double>::infinity();
    int bad = 0;
    for (double v : d) {
      const double s = sign * v;
      lo = std::min(lo, s);
      if (!(s >= -kCmSlack)) ++bad;
    }
    rep.min_value.push_back(lo);
    rep.violations.push_back(bad);
  }
  rep.pass = std::all_of(rep.violations.begin(), rep.violations.end(), [](int v) { return v == 0; });
  return rep;
}

CmReport cm_evidence(int n, std::span<const double> a_grid, int max_order) {
  check_order(n);
  if (a_grid.size() < 2) throw ConfigError("cm_evidence: grid needs at least two points");
  const double h = a_grid[1] - a_grid[0];
  if (!(a_grid[0] > 0.0) || !(h > 0.0)) throw ConfigError("cm_evidence: grid must be positive and increasing");
  for (std::size_t i = 1; i < a_grid.size(); ++i) {
    const double step = a_grid[i] - a_grid[i - 1];
    if (!(std::abs(step - h) <= 1e-9 * std::max(1.0, h))) {
      throw ConfigError("cm_evidence: grid spacing must be uniform");
    }
  }
  std::vector<double> f(a_grid.size());
  for (std::size_t i = 0; i < a_grid.size(); ++i) f[i] = phi(n, complex(-a_grid[i], 0.0)).real();
  CmReport rep = cm_differences(f, max_order);
  rep.n = n;
  return rep;
}

GramMatrix gram_phi(int n, std::span<const complex> points) {
  check_order(n);
  for (const complex& z : points) {
    if (!(std::abs(z) <= 1.0 - 1e-3)) throw DomainError("gram_phi: points must satisfy |z| <= 1 - 1e-3");
  }
  return hfock::make_gram(
      points, [n](complex z, complex w) { return phi(n, z * std::conj(w)); },
      [n](complex z) { return phi(n, std::norm(z)).real(); });
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::evidence: return "evidence";
  }
  return "unknown";
}

MlAudit ml_condition_audit(MlKernel kernel, int n, std::uint64_t seed) {
  check_order(n);
  MlAudit audit;
  const double eta0 = moments::shared_table().eta[0];
  const double eta1 = moments::shared_table().eta[1];

  std::function<complex(complex)> fn;
  double radius = 0.0;
  double coefficient_derivative = 0.0;
  if (kernel == MlKernel::phi_tilde) {
    audit.kernel = "phi_tilde(" + std::to_string(n) + ")";
    fn = [n](complex z) { return phi_tilde(n, z); };
    radius = 0.9;
    coefficient_derivative = n / (n + 1.0);
  } else {
    audit.kernel = "eta0_K";
    fn = [eta0](complex z) { return eta0 * hfock::eval_E(z); };
    radius = 2.0;
    coefficient_derivative = eta0 / eta1;
  }

  // i) normalisation and slope at the origin.
  {
    audit.value_at_0 = fn(0.0).real();
    audit.derivative_at_0 = coefficient_derivative;
    const double h = 1e-4;
    const double fd = ((fn(h) - fn(-h)) / (2.0 * h)).real();
    const bool ok = std::abs(audit.value_at_0 - 1.0) <= 1e-14 && coefficient_derivative > 0.0 &&
                    std::abs(fd - coefficient_derivative) <= 1e-6 * std::max(1.0, coefficient_derivative);
    std::ostringstream d;
    d.precision(15);
    d << "value(0)=" << audit.value_at_0 << " derivative(0)=" << coefficient_derivative
      << " finite-difference=" << fd;
    audit.conditions.push_back({"i", ok ? Status::pass : Status::fail, d.str()});
  }

  // ii) Gram matrices of phi(z conj w) on random points.
  {
    Rng rng(seed);
    const auto pts = rng.disk_points(30, radius);
    const GramMatrix g = hfock::make_gram(
        pts, [&fn](complex z, complex w) { return fn(z * std::conj(w)); },
        [&fn](complex z) { return fn(std::norm(z)).real(); });
    std::ostringstream d;
    d.precision(6);
    d << "30 points in |z|<=" << radius << " min_eig=" << g.min_eig << " trace=" << g.trace;
    audit.conditions.push_back({"ii", g.psd() ? Status::pass : Status::fail, d.str()});
  }

  // iii) finite-difference complete monotonicity of a -> phi(-a).
  {
    const std::vector<double> grid = uniform_grid(0.1, 0.1, 50);
    std::vector<double> f(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) f[i] = fn(complex(-grid[i], 0.0)).real();
    const CmReport rep = cm_differences(f, 6);
    std::ostringstream d;
    d << (rep.pass ? "sign pattern consistent" : "sign pattern violated") << " through order 6 on a=0.1..5.0;"
      << " violations per order:";
    for (int v : rep.violations) d << ' ' << v;
    audit.conditions.push_back({"iii", Status::evidence, d.str()});
  }
  return audit;
}

}  // namespace hfs::lerch
