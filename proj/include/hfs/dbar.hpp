#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "hfs/hfock.hpp"

namespace hfs::dbar {

using complex = std::complex<double>;
using hfock::EntireSeries;

/// f(z) = sum_{k<order} sum_j conj(z)^k z^j a(k, j).
struct PolyanalyticSeries {
  int order = 1;
  Eigen::MatrixXcd coeffs;  // order x (J + 1)

  static PolyanalyticSeries zeros(int order, int degree);
  static PolyanalyticSeries from_entire(const EntireSeries& f);
};

/// Horner in z for each k, then weighted by conj(z)^k.
complex eval_poly(const PolyanalyticSeries& f, complex z);

/// Exact d/dzbar of f as another polyanalytic series of order - 1 (order 1 gives 0).
PolyanalyticSeries dbar_symbolic(const PolyanalyticSeries& f);

/// F_n(z, w) = e^{z conj w} sum_{k<n} (-1)^k / k! C(n, k+1) |z - w|^{2k}, 1 <= n <= 20.
complex fock_poly_kernel(int n, complex z, complex w);

/// u = conj(z) f(z) + u0(z).
PolyanalyticSeries assemble_solution(const EntireSeries& f, const EntireSeries& u0);

struct ResidualReport {
  double numeric_max = 0.0;   // max |fd dbar u - f| over the samples
  double symbolic_max = 0.0;  // max |(dbar u)(z) - f(z)| with the exact derivative
  double tolerance = 0.0;
  double h = 0.0;
  std::vector<double> numeric;  // per sample
  bool pass = false;            // numeric_max <= tolerance
};

/// Checks dbar u = f on samples with |z| <= 3 by central differences of step h
/// (0 < h <= 1e-3) and by the exact polyanalytic derivative.
ResidualReport dbar_residual(const PolyanalyticSeries& u, const EntireSeries& f,
                             std::span<const complex> samples, double h = 1e-5,
                             double tolerance = 1e-6);

enum class Convention { normalized, unnormalized };

struct WeightM {
  double value = 0.0;      // +inf when it overflows
  double log_value = 0.0;  // always finite for nonzero f
};

/// M(f) = c sum_n n! |a_n|^2, c = 1 (normalized) or pi (unnormalized).
WeightM weight_M(const EntireSeries& f, Convention convention = Convention::unnormalized);

/// Truncated F_w(z) = e^{z conj w}: coefficients conj(w)^j / j!, j <= degree.
EntireSeries fw_series(complex w, int degree);

/// Bound on sum_{n>degree} |w|^{2n} / n!, the part of M(F_w) = e^{|w|^2} lost by truncation.
double fw_weight_tail(complex w, int degree);

struct HfpReport {
  double lhs = 0.0;     // pi ||u0||_H^2
  double weight = 0.0;  // M(f), unnormalized
  double budget = 0.0;  // 3 M(f)
  double ratio = 0.0;   // lhs / M(f)
  bool member = false;  // lhs <= 3 M(f)
};

HfpReport hfp_membership_check(const EntireSeries& u0, const EntireSeries& f);

}  // namespace hfs::dbar
