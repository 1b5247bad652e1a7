#include "hfs/app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "hfs/app/golden.hpp"
#include "hfs/bargmann.hpp"
#include "hfs/dbar.hpp"
#include "hfs/error.hpp"
#include "hfs/expint.hpp"
#include "hfs/hfock.hpp"
#include "hfs/lerch.hpp"
#include "hfs/moments.hpp"
#include "hfs/numerics.hpp"
#include "hfs/random.hpp"

namespace hfs::verify {

namespace {

using complex = std::complex<double>;
using hfock::EntireSeries;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Running maximum that keeps a NaN instead of silently dropping it.
double worse(double acc, double x) { return std::isnan(acc) || std::isnan(x) ? std::numeric_limits<double>::quiet_NaN() : std::max(acc, x); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
double rel(complex a, complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

class Collector {
 public:
  explicit Collector(std::string suite) { result_.suite = std::move(suite); }

  /// measured <= limit.
  void at_most(std::string name, double measured, double limit, std::string details = {}) {
    result_.checks.push_back({std::move(name), measured <= limit, measured, limit, "<=", std::move(details)});
  }
  /// measured >= limit.
  void at_least(std::string name, double measured, double limit, std::string details = {}) {
    result_.checks.push_back({std::move(name), measured >= limit, measured, limit, ">=", std::move(details)});
  }
  void holds(std::string name, bool ok, std::string details = {}) {
    result_.checks.push_back({std::move(name), ok, ok ? 1.0 : 0.0, 1.0, "==", std::move(details)});
  }
  /// Runs body; a thrown hfs::Error becomes a failed check of that name.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      result_.checks.push_back({name, false, kInf, 0.0, "<=", std::string("error: ") + e.what()});
    }
  }

  SuiteResult finish() {
    std::stable_sort(result_.checks.begin(), result_.checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    return std::move(result_);
  }

 private:
  SuiteResult result_;
};

EntireSeries random_series(Rng& rng, int degree) {
  std::vector<complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = rng.unit_square();
  return EntireSeries::from(std::move(c), "random");
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------- quadrature

SuiteResult suite_quadrature(const Options& o) {
  Collector c("quadrature");
  c.guarded("laguerre_moments", [&] {
    double worst = 0.0;
    for (int n : {1, 2, 5, 10, 20}) {
      const auto rule = numerics::gauss_laguerre_rule(n);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        const double m = rule.apply([k](double x) { return std::pow(x, k); });
        worst = worse(worst, rel(m, std::tgamma(k + 1.0)));
      }
    }
    c.at_most("laguerre_moments", worst, 1e-12, "n in {1,2,5,10,20}, degree <= 2n-1");
  });
  c.guarded("hermite_moments", [&] {
    double worst = 0.0;
    for (int n : {1, 3, 10, 20, 40}) {
      const auto rule = numerics::gauss_hermite_rule(n);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        const double m = rule.apply([k](double x) { return std::pow(x, k); });
        const double exact = k % 2 == 1 ? 0.0 : std::tgamma(0.5 * (k + 1));
        worst = worse(worst, std::abs(m - exact) / std::tgamma(0.5 * (k + 1)));
      }
    }
    c.at_most("hermite_moments", worst, 1e-12, "relative to Gamma((k+1)/2)");
  });
  c.guarded("rule_shape", [&] {
    bool ok = true;
    for (int n : {1, 2, 7, 64, 150}) {
      for (const auto& rule : {numerics::gauss_laguerre_rule(n), numerics::gauss_hermite_rule(n)}) {
        for (Eigen::Index i = 0; i < rule.size(); ++i) {
          ok = ok && rule.weights[i] > 0.0;
          if (i > 0) ok = ok && rule.nodes[i] > rule.nodes[i - 1];
        }
      }
    }
    c.holds("rule_shape", ok, "nodes strictly increasing, weights > 0");
  });
  c.guarded("laguerre_eta0_n64", [&] {
    const auto rule = numerics::gauss_laguerre_rule(64);
    const double v = rule.apply([](double t) { return 1.0 / ((1.0 + t) * (1.0 + t)); });
    c.at_most("laguerre_eta0_n64", std::abs(v - moments::eta_closed_form(0)), 1e-6);
  });
  c.guarded("hermite_psi0_n40", [&] {
    const auto rule = numerics::gauss_hermite_rule(40);
    const double v = rule.apply([](double) { return 1.0 / std::sqrt(std::numbers::pi); });
    c.at_most("hermite_psi0_n40", std::abs(v - 1.0), 1e-12);
  });
  c.guarded("semi_infinite_monomials", [&] {
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const auto r = numerics::integrate_semi_infinite(
          [k](double t) { return std::exp(k * std::log(t) - t); }, o.tol);
      worst = worse(worst, rel(r.value, std::tgamma(k + 1.0)));
    }
    c.at_most("semi_infinite_monomials", worst, std::max(o.tol, 1e-12), "t^k e^-t, k <= 20");
  });
  c.guarded("wirtinger_analytic", [&] {
    Rng rng(o.seed);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const EntireSeries p = random_series(rng, rng.integer(0, 5));
      const complex z = rng.disk(2.0);
      worst = worse(worst, std::abs(numerics::wirtinger_dbar_fd(p, z)));
    }
    c.at_most("wirtinger_analytic", worst, 1e-8, "polynomials of degree <= 5, |z| <= 2");
  });
  c.guarded("wirtinger_conjugate", [&] {
    const complex z(1.0, 2.0);
    const double g1 = std::abs(numerics::wirtinger_dbar_fd([](complex w) { return std::conj(w); }, z) - 1.0);
    const complex z2(0.3, 0.1);
    const double g2 = std::abs(
        numerics::wirtinger_dbar_fd([](complex w) { return std::conj(w) * std::exp(w); }, z2) - std::exp(z2));
    c.at_most("wirtinger_conjugate", g1, 1e-9);
    c.at_most("wirtinger_product_rule", g2, 1e-6);
  });
  c.guarded("min_eig_2x2", [&] {
    const complex offs[] = {-1.0, 0.0, 1.0, complex(0.0, 1.0)};
    double worst = 0.0;
    for (double a : {-1.0, 0.0, 1.0}) {
      for (double d : {-1.0, 0.0, 1.0}) {
        for (complex b : offs) {
          Eigen::MatrixXcd m(2, 2);
          m << a, b, std::conj(b), d;
          const double exact = 0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
          worst = worse(worst, std::abs(numerics::min_eigenvalue_hermitian(m) - exact));
        }
      }
    }
    c.at_most("min_eig_2x2", worst, 1e-12, "all Hermitian 2x2 with entries in {-1,0,1,i}");
  });
  c.guarded("min_eig_examples", [&] {
    const double id = numerics::min_eigenvalue_hermitian(Eigen::MatrixXcd::Identity(3, 3));
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d.diagonal() << 2.0, 0.5, -1.0;
    const double dm = numerics::min_eigenvalue_hermitian(d);
    c.at_most("min_eig_examples", worse(std::abs(id - 1.0), std::abs(dm + 1.0)), 1e-14);
  });
  {
    bool rejected = false;
    try {
      Eigen::MatrixXcd m(2, 2);
      m << 1.0, 1.0, 0.0, 1.0;
      numerics::min_eigenvalue_hermitian(m);
    } catch (const ValidationError&) {
      rejected = true;
    }
    c.holds("min_eig_rejects_non_hermitian", rejected);
  }
  return c.finish();
}

// ---------------------------------------------------------------- expint

SuiteResult suite_expint(const Options& o) {
  Collector c("expint");
  const double xs[] = {0.5, 1.0, 2.0, 10.0};
  c.guarded("recurrence_residual", [&] {
    double worst = 0.0;
    double family_gap = 0.0;
    for (double x : xs) {
      const auto e = expint::en_family(200, x);
      const double emx = std::exp(-x);
      for (int n = 1; n < 200; ++n) {
        const double r = std::fma(x, e[n], std::fma(static_cast<double>(n), e[n + 1], -emx));
        worst = worse(worst, std::abs(r) / emx);
      }
      for (int n = 0; n <= 200; ++n) family_gap = worse(family_gap, rel(e[n], expint::en(n, x)));
    }
    c.at_most("recurrence_residual", worst, 1e-15, "|n E_{n+1} - e^-x + x E_n| / e^-x, n <= 200");
    c.at_most("family_matches_en", family_gap, 1e-13);
  });
  c.guarded("sandwich", [&] {
    int bad = 0;
    for (double x : xs) {
      for (int n = 1; n <= 200; ++n) {
        const double v = std::exp(x) * expint::en(n, x);
        if (!(v > 1.0 / (x + n) && v <= 1.0 / (x + n - 1.0))) ++bad;
      }
    }
    const double v100 = std::exp(100.0) * expint::e1(100.0);
    if (!(v100 > 1.0 / 101.0 && v100 <= 0.01)) ++bad;
    c.at_most("sandwich", bad, 0.0, "violations of 1/(x+n) < e^x E_n(x) <= 1/(x+n-1)");
  });
  c.guarded("gamma_relation", [&] {
    double worst = 0.0;
    double quad = 0.0;
    for (int k = 2; k <= 20; ++k) {
      const double g = expint::incomplete_gamma_int(k - 1, 1.0);
      worst = worse(worst, rel(expint::en_extended(2 - k, 1.0), g));
      const int m = k - 1;
      const double q = numerics::integrate_semi_infinite(
                           [m](double t) { return std::exp((m - 1) * std::log1p(t) - 1.0 - t); }, o.tol)
                           .value;
      quad = worse(quad, rel(q, g));
    }
    c.at_most("gamma_relation", worst, 1e-13, "E_{2-k}(1) vs Gamma(k-1,1), k in 2..20 (relative)");
    c.at_most("incomplete_gamma_vs_quadrature", quad, 1e-11);
  });
  c.guarded("laplace_vs_quadrature", [&] {
    double worst = 0.0;
    for (double a : {-0.5, 0.1, 1.0, 3.0}) {
      for (int n = 1; n <= 10; ++n) {
        const double q = numerics::integrate_semi_infinite(
                             [a, n](double t) {
          const double e = expint::en(n, t);
          return e == 0.0 ? 0.0 : std::exp(-a * t) * e;  // avoid inf * 0 for a < 0
        }, o.tol)
                             .value;
        worst = worse(worst, std::abs(expint::laplace_en(n, a) - q));
      }
    }
    c.at_most("laplace_vs_quadrature", worst, 1e-9, "a in {-0.5,0.1,1,3}, n <= 10");
  });
  c.guarded("laplace_branch_overlap", [&] {
    double worst = 0.0;
    for (double a : {-0.9, -0.5, 0.5, 0.9}) {
      for (int n = 1; n <= 10; ++n) {
        worst = worse(worst, rel(expint::detail::laplace_en_series(n, a), expint::detail::laplace_en_closed(n, a)));
      }
    }
    c.at_most("laplace_branch_overlap", worst, 1e-11);
  });
  c.guarded("laplace_examples", [&] {
    c.at_most("laplace_n1_a1", std::abs(expint::laplace_en(1, 1.0) - std::numbers::ln2), 1e-15);
    c.at_most("laplace_a0", std::abs(expint::laplace_en(3, 0.0) - 1.0 / 3.0), 0.0);
  });
  c.guarded("e1_series_identity", [&] {
    // -gamma - sum_{n>=1} (-1)^n / (n! n) at x = 1, summed independently.
    double s = 0.0, term = 1.0;
    for (int n = 1; n <= 30; ++n) {
      term *= -1.0 / n;
      s += term / n;
    }
    c.at_most("e1_series_identity", std::abs(expint::e1(1.0) - (-expint::kEulerGamma - s)), 1e-15);
  });
  return c.finish();
}

// ---------------------------------------------------------------- moments

SuiteResult suite_moments(const Options& o) {
  Collector c("moments");
  c.guarded("quadrature_vs_closed", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 30; ++n) worst = worse(worst, rel(moments::eta_quadrature(n, o.tol), moments::eta_closed_form(n)));
    c.at_most("quadrature_vs_closed", worst, 1e-10, "n <= 30");
  });
  c.guarded("binomial_vs_closed", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) worst = worse(worst, rel(moments::eta_binomial(n), moments::eta_closed_form(n)));
    c.at_most("binomial_vs_closed", worst, 1e-8, "n <= 20");
  });
  {
    bool rejected = false;
    try {
      moments::eta_binomial(26);
    } catch (const PrecisionError&) {
      rejected = true;
    }
    c.holds("binomial_rejects_n26", rejected);
  }
  c.guarded("residual_recurrence", [&] {
    const Eigen::VectorXd r = moments::residual_sequence(101);
    double worst = 0.0;
    for (int n = 1; n <= 100; ++n) {
      const double direct = std::numbers::e * (n + 2.0) * expint::en(n + 1, 1.0) - 1.0;
      worst = worse(worst, std::abs(r[n + 1] - direct));
    }
    bool bounded = true;
    for (int n = 1; n <= 101; ++n) bounded = bounded && r[n] > 0.0 && r[n] <= 1.0 / n;
    c.at_most("residual_recurrence", worst, 1e-13, "n <= 100");
    c.holds("residual_bounds", bounded, "0 < r_n <= 1/n");
  });
  c.guarded("eta_step_identity", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 30; ++n) {
      const double rhs = std::numbers::e * std::tgamma(n + 1.0) * expint::en(n + 1, 1.0) - moments::eta_closed_form(n);
      worst = worse(worst, rel(rhs, moments::eta_closed_form(n + 1)));
    }
    c.at_most("eta_step_identity", worst, 1e-11, "eta_{n+1} = e n! E_{n+1}(1) - eta_n, n <= 30");
  });
  c.guarded("log_eta_monotone", [&] {
    const int nmax = o.nmax > 0 ? o.nmax : 1000;
    const auto t = moments::closed_form_table(nmax);
    int bad = 0;
    for (int n = 3; n <= nmax; ++n) bad += t.log_eta[n] > t.log_eta[n - 1] ? 0 : 1;
    c.at_most("log_eta_monotone_from_2", bad, 0.0, "n in [2, " + std::to_string(nmax) + "]");
    c.holds("small_index_pattern", t.eta[0] > t.eta[1] && t.eta[1] < t.eta[2], "eta_0 > eta_1 < eta_2");
  });
  c.guarded("eta1_series_identity", [&] {
    double s = 0.0, term = 1.0;
    for (int k = 1; k <= 30; ++k) {
      term *= -1.0 / k;
      s += term / k;
    }
    const double v = -2.0 * std::numbers::e * expint::kEulerGamma - 2.0 * std::numbers::e * s - 1.0;
    c.at_most("eta1_series_identity", rel(v, moments::eta_closed_form(1)), 1e-13);
  });
  c.guarded("techlemma", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
      const auto [lhs, rhs] = moments::techlemma_check(n, o.tol);
      worst = worse(worst, rel(lhs, rhs));
    }
    c.at_most("techlemma", worst, 1e-9, "n <= 20");
  });
  c.guarded("table_overflow", [&] {
    const auto t = moments::eta_table(300, o.tol);
    bool ok = t.log_eta.allFinite();
    for (int n = 0; n <= 300; ++n) ok = ok && (n >= 171 ? t.overflow(n) : !t.overflow(n));
    c.holds("table_overflow", ok, "log_eta finite; eta flagged overflow exactly for n >= 171");
  });
  return c.finish();
}

// ---------------------------------------------------------------- bounds

SuiteResult suite_bounds(const Options& o) {
  Collector c("bounds");
  c.guarded("bounds", [&] {
    const int nmax = o.nmax > 0 ? o.nmax : 170;
    const auto t = moments::closed_form_table(nmax);
    int lower = 0, upper = 0, sharp = 0;
    for (int n = 0; n <= nmax; ++n) {
      if (!(moments::log_lower_bound(n) <= t.log_eta[n])) ++lower;
      if (!(t.log_eta[n] <= moments::log_upper_bound(n))) ++upper;
      if (n >= 1 && !(t.log_eta[n] <= moments::log_sharp_upper_bound(n))) ++sharp;
    }
    const std::string range = "n <= " + std::to_string(nmax);
    c.at_most("lower_bound_violations", lower, 0.0, range);
    c.at_most("upper_bound_violations", upper, 0.0, range);
    c.at_most("sharp_upper_bound_violations", sharp, 0.0, range);
  });
  c.guarded("eta5_interval", [&] {
    const double v = moments::eta_closed_form(5);
    c.holds("eta5_interval", v >= 0.46875 && v <= 4.8, "eta_5 = " + fmt(v));
  });
  return c.finish();
}

// ---------------------------------------------------------------- factorial-sum

SuiteResult suite_factorial_sum(const Options&) {
  Collector c("factorial-sum");
  c.guarded("tails", [&] {
    for (int N : {100, 1000}) {
      const double s = moments::eta_factorial_sum(N);
      c.at_most("tail_N" + std::to_string(N), 1.0 - s, 1.1 / N, "1 - partial sum");
      c.at_most("partial_le_1_N" + std::to_string(N), s, 1.0);
    }
  });
  c.guarded("monotone", [&] {
    const auto& t = moments::shared_table();
    int bad = 0;
    double s = 0.0;
    for (int n = 0; n <= 1000; ++n) {
      const double next = s + t.eta_over_factorial(n);
      if (next < s) ++bad;
      s = next;
    }
    c.at_most("monotone", bad, 0.0, "N <= 1000");
    c.at_most("N0_is_eta0", std::abs(moments::eta_factorial_sum(0) - t.eta[0]), 0.0);
  });
  return c.finish();
}

// ---------------------------------------------------------------- gfs

std::vector<complex> gfs_points(const Options& o) {
  if (o.points < 0) {
    std::vector<complex> z;
    for (int i = 0; i < 20; ++i) z.emplace_back(-0.85 + i * (5.0 + 0.85) / 19.0, 0.0);
    for (complex w : {complex(2, 1), complex(-0.5, 0.5), complex(1, -2), complex(-0.5, 3), complex(-0.8, 0.2)}) {
      z.push_back(w);
    }
    return z;
  }
  Rng rng(o.seed);
  std::vector<complex> z;
  for (int i = 0; i < o.points; ++i) z.emplace_back(rng.uniform(-0.9, 5.0) + 0.0, 0.0);
  for (int i = 0; i < std::max(1, o.points / 4); ++i) {
    complex w;
    do {
      w = rng.disk(5.0);
    } while (!(w.real() > -0.9));
    z.push_back(w);
  }
  return z;
}

SuiteResult suite_gfs(const Options& o) {
  Collector c("gfs");
  c.guarded("series_vs_closed", [&] {
    double worst = 0.0;
    complex at;
    for (complex z : gfs_points(o)) {
      if (!(z.real() > -0.9)) continue;
      const double g = std::abs(moments::generating_S(z) - moments::gfs_rhs(z));
      if (g > worst) {
        worst = g;
        at = z;
      }
    }
    c.at_most("series_vs_closed", worst, 1e-9,
              "max gap at z = " + fmt(at.real()) + (at.imag() < 0 ? "" : "+") + fmt(at.imag()) + "i");
  });
  c.guarded("z0", [&] {
    const double a = std::abs(moments::generating_S(0.0) - moments::eta_closed_form(0));
    const double b = std::abs(moments::gfs_rhs(0.0) - moments::eta_closed_form(0));
    c.at_most("z0", worse(a, b), 1e-15);
  });
  {
    bool rejected = false;
    try {
      moments::gfs_rhs(-1.0);
    } catch (const DomainError&) {
      rejected = true;
    }
    c.holds("rejects_re_le_minus1", rejected);
  }
  return c.finish();
}

// ---------------------------------------------------------------- efun

SuiteResult suite_efun(const Options& o) {
  Collector c("efun");
  c.guarded("growth", [&] {
    int bad = 0;
    for (double r : {0.0, 0.5, 1.0, 2.0, 3.0, 5.0}) {
      const double e = hfock::eval_E(r, o.tol).real();
      if (!(std::exp(r) <= e && e <= 8.0 * std::exp(2.0 * r))) ++bad;
    }
    c.at_most("growth_violations", bad, 0.0, "e^r <= E(r) <= 8 e^{2r}");
  });
  c.guarded("kernel_diagonal", [&] {
    double worst = 0.0;
    for (double r : {0.25, 0.75, 1.25, 2.0}) {
      for (int k = 0; k < 5; ++k) {
        const complex z = std::polar(r, 2.0 * std::numbers::pi * k / 5.0);
        const complex kzz = hfock::kernel_K(z, z, o.tol);
        const double e = hfock::eval_E(std::norm(z), o.tol).real();
        worst = worse(worst, std::abs(kzz - e) / e);
      }
    }
    c.at_most("kernel_diagonal", worst, 1e-12, "20-point polar grid");
  });
  c.guarded("origin", [&] {
    c.at_most("E0", std::abs(hfock::eval_E(0.0) - 1.0 / moments::eta_closed_form(0)), 1e-15);
  });
  c.guarded("truncation_certified", [&] {
    double worst = 0.0;
    for (complex z : {complex(-3, 0), complex(2, 2), complex(5, 0), complex(0, -4)}) {
      const complex a = hfock::eval_E(z, 1e-12);
      const complex b = hfock::eval_E(z, 1e-15);
      worst = worse(worst, std::abs(a - b) / std::max(1.0, std::exp(std::abs(z))));
    }
    c.at_most("truncation_certified", worst, 1e-12);
  });
  return c.finish();
}

// ---------------------------------------------------------------- kernel

SuiteResult suite_kernel(const Options& o) {
  Collector c("kernel");
  Rng rng(o.seed);
  c.guarded("hermitian", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const complex z = rng.disk(2.0), w = rng.disk(2.0);
      const complex a = hfock::kernel_K(z, w, o.tol), b = std::conj(hfock::kernel_K(w, z, o.tol));
      worst = worse(worst, std::abs(a - b) / std::abs(a));
    }
    c.at_most("hermitian", worst, 1e-14, "100 random pairs");
  });
  c.guarded("reproducing", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const EntireSeries f = random_series(rng, rng.integer(0, 10));
      const complex z = rng.disk(2.0);
      const auto [ip, fz] = hfock::reproducing_check(f, z);
      worst = worse(worst, std::abs(ip - fz) / (1.0 + std::abs(fz)));
    }
    c.at_most("reproducing", worst, 1e-12, "100 random polynomials of degree <= 10");
  });
  c.guarded("orthonormal_coefficients", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 40; ++n) {
      for (int m = 0; m <= 40; ++m) {
        const complex v = hfock::h_inner(EntireSeries::basis(n), EntireSeries::basis(m));
        worst = worse(worst, std::abs(v - (n == m ? 1.0 : 0.0)));
      }
    }
    c.at_most("orthonormal_coefficients", worst, 1e-12, "n, m <= 40");
  });
  c.guarded("orthonormal_quadrature", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) worst = worse(worst, std::abs(hfock::norm_by_quadrature(EntireSeries::basis(n), o.tol) - 1.0));
    c.at_most("orthonormal_quadrature", worst, 1e-9, "||e_n||^2 by radial quadrature, n <= 20");
  });
  c.guarded("monomial_orthogonality", [&] {
    // Only equal indices are paired, so distinct monomials are exactly orthogonal.
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) {
      for (int m = 0; m <= 12; ++m) {
        if (n != m) worst = worse(worst, std::abs(hfock::h_inner(EntireSeries::monomial(n), EntireSeries::monomial(m))));
      }
    }
    c.at_most("monomial_orthogonality", worst, 0.0);
  });
  c.guarded("one_plus_z", [&] {
    const double v = hfock::h_inner(EntireSeries::from({1.0, 1.0}), EntireSeries::from({1.0, 1.0})).real();
    c.at_most("one_plus_z", rel(v, std::numbers::e * expint::e1(1.0)), 1e-14, "equals e E1(1)");
  });
  c.guarded("norm_routes", [&] {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const EntireSeries f = random_series(rng, rng.integer(0, 10));
      const double h = hfock::h_inner(f, f).real();
      worst = worse(worst, rel(hfock::norm_by_quadrature(f, o.tol), h));
    }
    c.at_most("norm_routes", worst, 1e-10, "coefficient vs quadrature norm, 10 random series");
  });
  c.guarded("norm_comparison", [&] {
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const EntireSeries f = random_series(rng, rng.integer(0, 60));
      if (!(hfock::h_norm(f) <= hfock::fock_norm(f))) ++bad;
    }
    c.at_most("norm_comparison", bad, 0.0, "h_norm <= fock_norm, 100 random series");
  });
  c.guarded("pointwise_bound", [&] {
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const EntireSeries f = random_series(rng, rng.integer(0, 12));
      if (!hfock::pointwise_bound_check(f, rng.disk(3.0)).holds) ++bad;
    }
    c.at_most("pointwise_bound_violations", bad, 0.0);
    // Saturation by the kernel itself.
    const complex w(0.7, -0.4);
    const auto rep = hfock::pointwise_bound_check(hfock::kernel_section(w, 80), w);
    c.at_most("pointwise_bound_saturation", std::abs(rep.lhs / rep.rhs - 1.0), 1e-10);
  });
  c.guarded("psd", [&] {
    double worst = -kInf;
    for (int s = 0; s < 20; ++s) {
      const auto pts = rng.disk_points(50, 2.0);
      const auto g = hfock::gram_K(pts, o.tol);
      worst = worse(worst, -g.min_eig / g.trace);
    }
    c.at_most("psd", worst, 1e-8, "-min_eig / trace over 20 sets of 50 points");
    const std::vector<complex> dup{1.0, 1.0};
    const auto g = hfock::gram_K(dup, o.tol);
    c.holds("psd_duplicate", g.psd() && std::abs(g.min_eig) <= 1e-12 * g.trace);
  });
  c.guarded("membership", [&] {
    const auto m = hfock::membership(EntireSeries::basis(3));
    const double expect = std::sqrt(6.0 / moments::eta_closed_form(3));
    c.at_most("membership_e3", worse(std::abs(m.h_norm - 1.0), rel(m.fock_norm, expect)), 1e-14);
    std::vector<complex> conv(120), div(120);
    for (int n = 0; n < 120; ++n) {
      const double s = std::exp(-0.5 * moments::shared_table().log_eta[n]);
      conv[n] = s / (n + 1.0);
      div[n] = s;
    }
    const bool ok = hfock::classify_stream(conv).growth == hfock::Growth::converging &&
                    hfock::classify_stream(div).growth == hfock::Growth::diverging;
    c.holds("stream_classification", ok);
  });
  return c.finish();
}

// ---------------------------------------------------------------- bargmann

SuiteResult suite_bargmann(const Options& o) {
  Collector c("bargmann");
  Rng rng(o.seed);
  c.guarded("orthonormality", [&] {
    const auto rule = numerics::gauss_hermite_rule(200);
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(41, 41);
    for (Eigen::Index i = 0; i < rule.size(); ++i) {
      const double x = rule.nodes[i];
      const Eigen::VectorXd psi = bargmann::hermite_psi(40, x).values;
      gram += std::exp(rule.log_weights[i] + x * x) * psi * psi.transpose();
    }
    c.at_most("orthonormality", (gram - Eigen::MatrixXd::Identity(41, 41)).cwiseAbs().maxCoeff(), 1e-9,
              "41x41 Gram under 200-node Gauss-Hermite");
  });
  c.guarded("recurrence_and_envelope", [&] {
    double worst = 0.0, env = 0.0;
    for (double x = -40.0; x <= 40.0; x += 0.73) {
      const auto h = bargmann::hermite_psi(1000, x);
      for (int n = 1; n < 1000; ++n) {
        const double lhs = h.values[n + 1];
        const double rhs = x * std::sqrt(2.0 / (n + 1.0)) * h.values[n] - std::sqrt(n / (n + 1.0)) * h.values[n - 1];
        const double scale = std::abs(h.values[n + 1]) + std::abs(x * h.values[n]) + std::abs(h.values[n - 1]);
        if (scale > 1e-280) worst = worse(worst, std::abs(lhs - rhs) / scale);
      }
      env = worse(env, h.values.cwiseAbs().maxCoeff());
    }
    c.at_most("recurrence_residual", worst, 1e-13);
    c.at_most("envelope", env, 1.0, "max |psi_n(x)|, n <= 1000, |x| <= 40");
  });
  c.guarded("psi_at_0", [&] {
    const auto h = bargmann::hermite_psi(1, 0.0);
    c.at_most("psi_at_0", worse(std::abs(h.values[0] - bargmann::pi_minus_quarter()), std::abs(h.values[1])), 1e-16);
  });
  c.guarded("l2_identity", [&] {
    double worst = 0.0;
    for (double r : {0.0, 0.5, 1.0, 1.5}) {
      const double e = hfock::eval_E(r * r).real();
      worst = worse(worst, std::abs(bargmann::l2_norm_A_sq(r, 200, 60) - e) / e);
    }
    c.at_most("l2_identity", worst, 1e-8, "|z| in {0,0.5,1,1.5}");
    const double e = hfock::eval_E(2.25).real();
    c.at_most("l2_identity_imaginary", std::abs(bargmann::l2_norm_A_sq(complex(0, 1.5), 200, 60) - e) / e, 1e-8);
  });
  c.guarded("rotation", [&] {
    double worst = 0.0;
    for (double r : {1.0, 1.5}) {
      const double base = bargmann::l2_norm_A_sq(r, 200, 60);
      for (int k = 1; k <= 8; ++k) {
        worst = worse(worst, std::abs(bargmann::l2_norm_A_sq(std::polar(r, 0.7 * k), 200, 60) - base) / base);
      }
    }
    c.at_most("rotation", worst, 1e-10, "8 angles");
  });
  c.guarded("bargmann_truncation", [&] {
    const complex z(0.5, 0.0);
    c.at_most("bargmann_vs_80_terms",
              std::abs(bargmann::bargmann_A(z, 1.0) - bargmann::bargmann_A_truncated(z, 1.0, 80)), 1e-10);
  });
  c.guarded("classical_gf", [&] {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const complex z = rng.disk(3.0);
      const double x = rng.uniform(-5.0, 5.0);
      const auto [lhs, rhs] = bargmann::classical_gf_check(z, x);
      worst = worse(worst, std::abs(lhs - rhs));
    }
    c.at_most("classical_gf", worst, 1e-10, "50 random (z, x)");
    const auto [l, r] = bargmann::classical_gf_check(complex(0.7, 0.2), 0.4);
    c.at_most("convention_factor",
              std::abs(l / bargmann::classical_gf_unnormalized(complex(0.7, 0.2), 0.4) - bargmann::pi_minus_quarter()),
              1e-13, "ratio to the pi^{1/4}-normalised generating function");
  });
  c.guarded("weighted_gf", [&] {
    double z0 = 0.0;
    for (double x : {-2.0, 0.0, 1.0, 4.0}) {
      const auto [l, r] = bargmann::weighted_gf_pair(0.0, x, 60, o.tol);
      z0 = worse(z0, std::abs(l - r));
    }
    c.at_most("weighted_gf_z0", z0, 1e-12);
    double small = 0.0;
    for (complex z : {complex(0.05, 0.0), complex(0.1, 0.0), complex(0.07, 0.05)}) {
      for (double x : {0.0, 0.5, 1.0}) {
        const auto [l, r] = bargmann::weighted_gf_pair(z, x, 60, o.tol);
        small = worse(small, std::abs(l - r) / (1.0 + std::abs(r)));
      }
    }
    c.at_most("weighted_gf_small_z", small, 1e-7, "|z| <= 0.1, N = 60");
    // The coefficients grow like sqrt(n!)/n^2: at |z| = 0.5 the 60-term sum has left the function.
    const auto [l, r] = bargmann::weighted_gf_pair(0.5, 0.0, 60, o.tol);
    c.at_least("weighted_gf_divergent_at_half", std::abs(l - r), 1e-7, "asymptotic, not convergent");
  });
  return c.finish();
}

// ---------------------------------------------------------------- lerch

SuiteResult suite_lerch(const Options& o) {
  Collector c("lerch");
  Rng rng(o.seed);
  c.guarded("taylor_coefficients", [&] {
    // Discrete Cauchy integral on |z| = 1/2 with 64 nodes.
    const int M = 64;
    const double rho = 0.5;
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
      std::vector<complex> vals(M);
      for (int k = 0; k < M; ++k) vals[k] = lerch::phi(n, std::polar(rho, 2.0 * std::numbers::pi * k / M));
      for (int p = 0; p <= 10; ++p) {
        complex s = 0.0;
        for (int k = 0; k < M; ++k) s += vals[k] * std::polar(1.0, -2.0 * std::numbers::pi * p * k / M);
        const complex coef = s / (M * std::pow(rho, p));
        worst = worse(worst, std::abs(coef - 1.0 / (n + p)) * (n + p));
      }
    }
    c.at_most("taylor_coefficients", worst, 1e-10, "p-th coefficient 1/(n+p), p <= 10");
  });
  c.guarded("dirichlet_log", [&] {
    double worst = 0.0;
    for (int i = -90; i <= 90; ++i) {
      if (i == 0) continue;
      const double x = i / 100.0;
      worst = worse(worst, std::abs(lerch::phi(1, x).real() * x + std::log1p(-x)));
    }
    c.at_most("dirichlet_log", worst, 1e-11, "x in [-0.9, 0.9] step 0.01");
  });
  c.guarded("laplace_identity", [&] {
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
      for (double a : {0.25, 0.5, 0.9, 2.0}) {
        const double q = numerics::integrate_semi_infinite(
                             [a, n](double t) {
          const double e = expint::en(n, t);
          return e == 0.0 ? 0.0 : std::exp(-a * t) * e;  // avoid inf * 0 for a < 0
        }, o.tol)
                             .value;
        worst = worse(worst, std::abs(lerch::phi(n, -a).real() - q));
      }
    }
    c.at_most("laplace_identity", worst, 1e-8, "n <= 5, a in {0.25,0.5,0.9,2}");
    c.at_most("phi2_minus09", std::abs(lerch::phi(2, -0.9).real() - expint::laplace_en(2, 0.9)), 1e-9);
  });
  c.guarded("lerch_s1", [&] {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const complex z = rng.disk(0.95);
      const int n = rng.integer(1, 5);
      worst = worse(worst, std::abs(lerch::lerch_phi(z, 1.0, n) - lerch::phi(n, z)));
    }
    c.at_most("lerch_s1", worst, 1e-12, "Phi(z,1,n) = phi_n(z), 50 random z");
  });
  c.guarded("lerch_integral", [&] {
    double worst = 0.0;
    for (complex z : {complex(0.5, 0.0), complex(-0.7, 0.2), complex(0.3, 0.6)}) {
      for (double s : {1.0, 2.0, 3.5}) {
        worst = worse(worst, rel(lerch::lerch_phi(z, s, 1.0), lerch::lerch_phi_integral(z, s, 1.0, o.tol)));
      }
    }
    c.at_most("lerch_integral", worst, 1e-8, "series vs integral representation");
  });
  c.guarded("hurwitz", [&] {
    double worst = 0.0;
    for (double s : {2.0, 3.0}) {
      for (double a : {1.0, 2.0}) {
        worst = worse(worst, std::abs(lerch::hurwitz_zeta(s, a, o.tol) - lerch::hurwitz_zeta_integral(s, a, o.tol)));
      }
    }
    c.at_most("hurwitz_routes", worst, 1e-9, "(s,a) in {2,3}x{1,2}");
    const double z2 = std::numbers::pi * std::numbers::pi / 6.0;
    c.at_most("zeta_2_1", std::abs(lerch::hurwitz_zeta(2.0, 1.0, o.tol) - z2), 1e-10);
    c.at_most("zeta_2_2", std::abs(lerch::hurwitz_zeta(2.0, 2.0, o.tol) - (z2 - 1.0)), 1e-10);
  });
  c.guarded("dirichlet_kernel", [&] {
    double worst = 0.0;
    const double h = std::sqrt(0.5);
    auto [a, b] = lerch::dirichlet_identity_check(h, h);
    worst = worse(worse(worst, std::abs(a - b)), std::abs(a - 2.0 * std::numbers::ln2));
    std::tie(a, b) = lerch::dirichlet_identity_check(0.6, complex(0.0, 0.7));
    worst = worse(worst, std::abs(a - b));
    for (int i = 0; i < 20; ++i) {
      const complex z = rng.disk(0.95), w = rng.disk(0.95);
      if (std::abs(z * std::conj(w)) == 0.0) continue;
      std::tie(a, b) = lerch::dirichlet_identity_check(z, w);
      worst = worse(worst, std::abs(a - b));
    }
    c.at_most("dirichlet_kernel", worst, 1e-11);
  });
  c.guarded("origin", [&] {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
      worst = worse(worst, std::abs(lerch::phi(n, 0.0) - 1.0 / n));
      worst = worse(worst, std::abs(lerch::phi_tilde(n, 0.0) - 1.0));
    }
    c.at_most("origin", worst, 0.0, "phi_n(0) = 1/n, phi_tilde_n(0) = 1");
    bool rejected = false;
    try {
      lerch::phi(1, 0.9999999);
    } catch (const DomainError&) {
      rejected = true;
    }
    c.holds("rejects_unit_circle", rejected);
  });
  c.guarded("gram_psd", [&] {
    double worst = -kInf;
    for (int n = 1; n <= 3; ++n) {
      for (int s = 0; s < 10; ++s) {
        const auto g = lerch::gram_phi(n, rng.disk_points(30, 0.95));
        worst = worse(worst, -g.min_eig / g.trace);
      }
    }
    c.at_most("gram_psd", worst, 1e-8, "-min_eig / trace, 10 sets of 30 points per n in {1,2,3}");
  });
  return c.finish();
}

// ---------------------------------------------------------------- cm-ml

SuiteResult suite_cm_ml(const Options& o) {
  Collector c("cm-ml");
  c.guarded("cm", [&] {
    const auto grid = lerch::uniform_grid(0.1, 0.1, 50);
    for (int n = 1; n <= 3; ++n) {
      const auto rep = lerch::cm_evidence(n, grid, 6);
      int bad = 0;
      for (int v : rep.violations) bad += v;
      c.at_most("cm_n" + std::to_string(n), bad, 0.0, "sign violations through order 6, a = 0.1..5.0");
    }
  });
  c.guarded("audit", [&] {
    auto record = [&](const lerch::MlAudit& a) {
      for (const auto& cond : a.conditions) {
        const std::string name = "audit_" + a.kernel + "_" + cond.name;
        if (cond.status == lerch::Status::evidence) {
          c.holds(name, true, "evidence: " + cond.details);
        } else {
          c.holds(name, cond.status == lerch::Status::pass, cond.details);
        }
      }
    };
    for (int n = 1; n <= 3; ++n) record(lerch::ml_condition_audit(lerch::MlKernel::phi_tilde, n, o.seed));
    record(lerch::ml_condition_audit(lerch::MlKernel::eta0_K, 1, o.seed));
  });
  return c.finish();
}

// ---------------------------------------------------------------- dbar

SuiteResult suite_dbar(const Options& o) {
  Collector c("dbar");
  Rng rng(o.seed);
  auto samples = [&](int n, double r) { return rng.disk_points(static_cast<std::size_t>(n), r); };
  c.guarded("assembled", [&] {
    double num = 0.0, sym = 0.0;
    int flagged = 0;
    for (int i = 0; i < 50; ++i) {
      const EntireSeries f = random_series(rng, rng.integer(0, 8));
      const EntireSeries u0 = random_series(rng, rng.integer(0, 8));
      const auto u = dbar::assemble_solution(f, u0);
      const auto pts = samples(10, 2.0);
      const auto rep = dbar::dbar_residual(u, f, pts, 1e-5);
      num = worse(num, rep.numeric_max);
      sym = worse(sym, rep.symbolic_max);
      // Negative control: perturb one conj(z) coefficient.
      auto bad = u;
      bad.coeffs(1, rng.integer(0, static_cast<int>(bad.coeffs.cols()) - 1)) += 0.1;
      if (!dbar::dbar_residual(bad, f, pts, 1e-5).pass) ++flagged;
    }
    c.at_most("assembled_numeric", num, 1e-6, "50 random (f, u0), 10 samples each, h = 1e-5");
    c.at_most("assembled_symbolic", sym, 0.0);
    c.at_least("negative_controls_flagged", flagged, 50.0);
  });
  c.guarded("fw_example", [&] {
    const complex w(0.5, 0.0);
    const EntireSeries f = dbar::fw_series(w, 20);
    const auto u = dbar::assemble_solution(f, EntireSeries::from({0.3, complex(0.0, 1.0)}));
    bool shape = true;
    for (int j = 0; j <= 20; ++j) shape = shape && std::abs(u.coeffs(1, j) - std::pow(std::conj(w), j) / std::tgamma(j + 1.0)) <= 1e-16;
    c.holds("fw_coefficients", shape);
    c.at_most("fw_residual", dbar::dbar_residual(u, f, samples(10, 2.0), 1e-5).numeric_max, 1e-6);
  });
  c.guarded("conj_square_control", [&] {
    auto u = dbar::PolyanalyticSeries::zeros(3, 0);
    u.coeffs(2, 0) = 1.0;
    c.holds("conj_square_control", !dbar::dbar_residual(u, EntireSeries::from({1.0}), samples(10, 2.0)).pass);
  });
  c.guarded("fock_kernels", [&] {
    double f1 = 0.0, f2 = 0.0;
    for (int i = 0; i < 20; ++i) {
      const complex z = rng.disk(2.0), w = rng.disk(2.0);
      f1 = worse(f1, std::abs(dbar::fock_poly_kernel(1, z, w) - std::exp(z * std::conj(w))) / std::abs(std::exp(z * std::conj(w))));
      f2 = worse(f2, rel(dbar::fock_poly_kernel(2, z, z), complex(2.0 * std::exp(std::norm(z)))));
    }
    c.at_most("f1_exponential", f1, 1e-14);
    c.at_most("f2_diagonal", f2, 1e-14);
    const auto pts = samples(20, 2.0);
    const auto g = hfock::make_gram(
        pts, [](complex z, complex w) { return dbar::fock_poly_kernel(2, z, w); },
        [](complex z) { return dbar::fock_poly_kernel(2, z, z).real(); });
    c.at_most("f2_psd", -g.min_eig / g.trace, 1e-8);
  });
  c.guarded("weight_M", [&] {
    const auto m = dbar::weight_M(dbar::fw_series(1.0, 30), dbar::Convention::normalized);
    c.at_most("weight_M_fw", std::abs(m.value - std::numbers::e), 1e-10);
    const auto one = dbar::weight_M(EntireSeries::from({1.0}));
    c.at_most("weight_M_one", std::abs(one.value - std::numbers::pi), 1e-15);
  });
  c.guarded("hfp", [&] {
    const EntireSeries one = EntireSeries::from({1.0});
    const auto r = dbar::hfp_membership_check(one, one);
    c.holds("hfp_member", r.member && std::abs(r.lhs - std::numbers::pi * moments::eta_closed_form(0)) <= 1e-14);
    // Scale u0 so that lhs = 3.1 M(f).
    const double s = std::sqrt(3.1 * r.weight / r.lhs);
    const auto v = dbar::hfp_membership_check(EntireSeries::from({s}), one);
    c.holds("hfp_violation", !v.member && std::abs(v.ratio - 3.1) <= 1e-12);
  });
  return c.finish();
}

// ---------------------------------------------------------------- golden

SuiteResult suite_golden(const Options& o) {
  Collector c("golden");
  const auto g = golden::GoldenFile::load(o.golden_path.empty() ? golden::default_path() : o.golden_path);
  c.guarded("eta", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 60; ++n) worst = worse(worst, rel(moments::eta_closed_form(n), g.real("eta_" + std::to_string(n))));
    c.at_most("eta_0_to_60", worst, 1e-12);
    c.at_most("eta_0", std::abs(moments::eta_closed_form(0) - g.real("eta_0")), 1e-12);
    c.at_most("eta_1", std::abs(moments::eta_closed_form(1) - g.real("eta_1")), 1e-12);
    c.at_most("eta_0_quadrature", std::abs(moments::eta_quadrature(0, o.tol) - g.real("eta_0")), 1e-12);
    c.at_most("eta_1_quadrature", std::abs(moments::eta_quadrature(1, o.tol) - g.real("eta_1")), 1e-12);
  });
  c.guarded("expint", [&] {
    c.at_most("e1_1", std::abs(expint::e1(1.0) - g.real("e1_1")), 1e-14);
    c.at_most("e1_2", rel(expint::e1(2.0), g.real("e1_2")), 1e-14);
    c.at_most("e2_1", rel(expint::en(2, 1.0), g.real("e2_1")), 1e-13);
    c.at_most("e5_1", rel(expint::en(5, 1.0), g.real("e5_1")), 1e-13);
    c.at_most("e3_10", rel(expint::en(3, 10.0), g.real("e3_10")), 1e-13);
    c.at_most("e20_2p5", rel(expint::en(20, 2.5), g.real("e20_2p5")), 1e-13);
    c.at_most("e1_complex_2_plus_3i", rel(expint::e1(complex(2, 3)), g.value("e1_complex_2_plus_3i")), 1e-12);
    c.at_most("e1_complex_0p5_minus_0p25i", rel(expint::e1(complex(0.5, -0.25)), g.value("e1_complex_0p5_minus_0p25i")), 1e-12);
    c.at_most("euler_gamma", std::abs(expint::kEulerGamma - g.real("euler_gamma")), 0.0);
    c.at_most("incgamma_3_1", rel(expint::incomplete_gamma_int(3, 1.0), g.real("incgamma_3_1")), 1e-13);
    c.at_most("laplace_e2_1", rel(expint::laplace_en(2, 1.0), g.real("laplace_e2_1")), 1e-13);
  });
  c.guarded("efun", [&] {
    c.at_most("efun_minus1", rel(hfock::eval_E(-1.0).real(), g.real("efun_minus1")), 1e-12);
    c.at_most("efun_1", rel(hfock::eval_E(1.0).real(), g.real("efun_1")), 1e-12);
    c.at_most("efun_0p5", rel(hfock::eval_E(0.5).real(), g.real("efun_0p5")), 1e-12);
  });
  c.guarded("gfs", [&] {
    const std::pair<const char*, complex> pts[] = {
        {"gfs_rhs_1", 1.0}, {"gfs_rhs_minus0p5", -0.5}, {"gfs_rhs_5", 5.0}, {"gfs_rhs_2_plus_1i", complex(2, 1)}};
    double closed = 0.0, series = 0.0;
    for (const auto& [name, z] : pts) {
      closed = worse(closed, rel(moments::gfs_rhs(z), g.value(name)));
      series = worse(series, std::abs(moments::generating_S(z) - g.value(name)));
    }
    c.at_most("gfs_closed_form", closed, 1e-12);
    c.at_most("gfs_series", series, 1e-9);
  });
  c.guarded("lerch", [&] {
    c.at_most("zeta_2_1", std::abs(lerch::hurwitz_zeta(2.0, 1.0, o.tol) - g.real("zeta_2_1")), 1e-10);
    c.at_most("zeta_3_1", std::abs(lerch::hurwitz_zeta(3.0, 1.0, o.tol) - g.real("zeta_3_1")), 1e-10);
    c.at_most("lerch_0p5_2_1", rel(lerch::lerch_phi(0.5, 2.0, 1.0), complex(g.real("lerch_0p5_2_1"))), 1e-12);
    c.at_most("two_log2", std::abs(lerch::phi(1, 0.5, 1e-16).real() - g.real("two_log2")), 1e-14);
  });
  c.guarded("misc", [&] {
    c.at_most("pi_minus_quarter", rel(bargmann::pi_minus_quarter(), g.real("pi_minus_quarter")), 1e-15);
    c.at_most("techlemma_10", rel(moments::techlemma_check(10, o.tol).first, g.real("techlemma_10")), 1e-9);
  });
  return c.finish();
}

using SuiteFn = SuiteResult (*)(const Options&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"bargmann", suite_bargmann}, {"bounds", suite_bounds},   {"cm-ml", suite_cm_ml},
      {"dbar", suite_dbar},         {"efun", suite_efun},       {"expint", suite_expint},
      {"factorial-sum", suite_factorial_sum}, {"gfs", suite_gfs}, {"golden", suite_golden},
      {"kernel", suite_kernel},     {"lerch", suite_lerch},     {"moments", suite_moments},
      {"quadrature", suite_quadrature},
  };
  return r;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const Options& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ConfigError("verify: unknown suite '" + name + "'");
  return it->second(options);
}

std::vector<SuiteResult> run(const std::string& name, const Options& options) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(run_suite(n, options));
  } else {
    out.push_back(run_suite(name, options));
  }
  return out;
}

}  // namespace hfs::verify
