#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hfs/error.hpp"
#include "hfs/numerics.hpp"

namespace hfs::hfock {

using complex = std::complex<double>;

/// g(z) = sum_n a_n z^n with finitely many coefficients.
struct EntireSeries {
  Eigen::VectorXcd coeffs;
  std::string label;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  complex operator()(complex z) const;

  static EntireSeries from(std::vector<complex> c, std::string label = {});
  static EntireSeries monomial(int n, complex c = 1.0);
  /// e_n = z^n / sqrt(eta_n), the orthonormal basis element.
  static EntireSeries basis(int n);
};

/// E(z) = sum_n z^n / eta_n. The truncation index comes from the certified
/// tail 8 (2|z|)^(N+1) / (N+1)! e^{2|z|}, made smaller than tol times
/// max(1, e^{|z|}) (a lower bound for sum |z|^n / eta_n).
complex eval_E(complex z, double tol = 1e-12);

/// Number of terms eval_E uses at |z| = r.
int truncation_index(double r, double tol);

/// K(z, w) = E(z conj(w)); with normalized, the ML-class form eta_0 K(z, w).
complex kernel_K(complex z, complex w, double tol = 1e-12, bool normalized = false);

/// sum_n eta_n a_n conj(b_n).
complex h_inner(const EntireSeries& f, const EntireSeries& g);
double h_norm(const EntireSeries& f);

/// sqrt(sum_n n! |a_n|^2); +inf when the sum overflows.
double fock_norm(const EntireSeries& f);

/// ||f||_H^2 with every moment recomputed by adaptive quadrature. deg(f) <= 50.
double norm_by_quadrature(const EntireSeries& f, double tol = 1e-12);

/// K_z as a series truncated at degree n: coefficients conj(z)^k / eta_k.
EntireSeries kernel_section(complex z, int n);

/// (<f, K_z>_H, f(z)).
std::pair<complex, complex> reproducing_check(const EntireSeries& f, complex z);

struct PointwiseReport {
  double lhs = 0.0;  // |f(z)|
  double rhs = 0.0;  // sqrt(E(|z|^2)) ||f||_H
  bool holds = false;
};

/// |f(z)| <= sqrt(E(|z|^2)) ||f||_H with a 1e-10 relative slack.
PointwiseReport pointwise_bound_check(const EntireSeries& f, complex z);

struct GramMatrix {
  std::vector<complex> points;
  Eigen::MatrixXcd entries;
  double min_eig = 0.0;
  double trace = 0.0;

  /// min_eig >= -1e-8 trace.
  bool psd() const { return min_eig >= -1e-8 * trace; }
};

/// Gram matrix of a Hermitian kernel. The upper triangle is evaluated and
/// mirrored; the diagonal is taken from diag(z) so it is exactly real.
template <class Kernel, class Diagonal>
GramMatrix make_gram(std::span<const complex> points, Kernel&& k, Diagonal&& diag) {
  if (points.size() > 200) throw ConfigError("gram: at most 200 points");
  if (points.empty()) throw ConfigError("gram: empty point set");
  GramMatrix g;
  g.points.assign(points.begin(), points.end());
  const auto n = static_cast<Eigen::Index>(points.size());
  g.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g.entries(i, i) = complex(diag(points[i]), 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const complex v = k(points[i], points[j]);
      g.entries(i, j) = v;
      g.entries(j, i) = std::conj(v);
    }
  }
  g.trace = g.entries.diagonal().real().sum();
  g.min_eig = numerics::min_eigenvalue_hermitian(g.entries);
  return g;
}

GramMatrix gram_K(std::span<const complex> points, double tol = 1e-12);

enum class Growth { converging, diverging, inconclusive };

struct Membership {
  double h_norm = 0.0;
  double fock_norm = 0.0;
  double ratio = 0.0;  // h_norm / fock_norm
  Eigen::VectorXd contributions;  // eta_n |a_n|^2
};

Membership membership(const EntireSeries& f);

/// Classification of a coefficient stream by the trend of eta_n |a_n|^2 over
/// the last `window` entries: geometric ratio first, then power-law exponent
/// against the 1/n borderline.
struct StreamReport {
  Eigen::VectorXd partial_sums;
  double log_ratio = 0.0;   // mean log(c_{n+1} / c_n) over the window
  double power_slope = 0.0; // fitted exponent p in c_n ~ n^p
  Growth growth = Growth::inconclusive;
};

StreamReport classify_stream(std::span<const complex> coeffs, int window = 32);

}  // namespace hfs::hfock
