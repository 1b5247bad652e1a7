#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "hfs/error.hpp"
#include "hfs/summation.hpp"

namespace hfs::numerics {

using complex = std::complex<double>;

enum class QuadratureKind { laguerre, hermite, adaptive_map };

/// Nodes and weights of a Gauss rule. The weight function is folded into the
/// weights: sum_i w_i f(x_i) approximates the integral of f times the weight.
struct QuadratureRule {
  QuadratureKind kind = QuadratureKind::laguerre;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  /// log of each weight; finite even where the weight underflows binary64.
  Eigen::VectorXd log_weights;

  Eigen::Index size() const { return nodes.size(); }

  template <class F>
  auto apply(F&& f) const {
    using R = decltype(f(0.0));
    CompensatedSum<R> acc;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
      if (weights[i] != 0.0) acc += weights[i] * f(nodes[i]);
    }
    return acc.value();
  }
};

template <class Scalar>
struct IntegralResult {
  Scalar value{};
  double abs_error_estimate = 0.0;
  std::size_t nodes_used = 0;
};

/// Gauss-Laguerre rule for the weight exp(-t) on (0, inf), 1 <= n <= 512.
QuadratureRule gauss_laguerre_rule(int n);

/// Gauss-Hermite rule for the weight exp(-x^2) on R, 1 <= n <= 512.
QuadratureRule gauss_hermite_rule(int n);

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class Scalar>
struct Panel {
  double a, b;
  Scalar value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// One Gauss-Kronrod 7/15 panel of g on [a, b].
template <class Scalar, class G>
Panel<Scalar> gk15(G& g, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Scalar fc = g(c);
  Scalar kronrod = fc * kWgk[7];
  Scalar gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const Scalar f1 = g(c - dx);
    const Scalar f2 = g(c + dx);
    kronrod += (f1 + f2) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  using std::abs;
  return {a, b, kronrod * h, abs((kronrod - gauss) * h)};
}

}  // namespace detail

/// Integral of f over (0, inf). The substitution t = u / (1 - u) maps the
/// half-line to (0, 1); panels start at the images of t = 0, 1/4, 1/2, ..., 4096
/// and the panel with the largest |K15 - G7| discrepancy is bisected until the
/// summed discrepancy is below tol * |value|.
///
/// Throws AccuracyError (with the best estimate) when max_panels is exhausted.
template <class F>
auto integrate_semi_infinite(F&& f, double tol, std::size_t max_panels = 20000) {
  using Scalar = decltype(f(1.0));
  using std::abs;
  if (!(tol > 0.0)) throw ConfigError("integrate_semi_infinite: tol must be positive");

  std::size_t evals = 0;
  auto g = [&](double u) -> Scalar {
    ++evals;
    const double one_minus = 1.0 - u;
    const double t = u / one_minus;
    if (!std::isfinite(t)) return Scalar(0);
    return f(t) / (one_minus * one_minus);
  };

  std::vector<double> breaks{0.0};
  for (int k = -2; k <= 12; ++k) {
    const double t = std::ldexp(1.0, k);
    breaks.push_back(t / (1.0 + t));
  }
  breaks.push_back(1.0);

  std::vector<detail::Panel<Scalar>> panels;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    panels.push_back(detail::gk15<Scalar>(g, breaks[i], breaks[i + 1]));
  }
  std::make_heap(panels.begin(), panels.end());

  Scalar value{};
  double error = 0.0;
  auto recompute = [&] {
    CompensatedSum<Scalar> acc;
    error = 0.0;
    for (const auto& p : panels) {
      acc += p.value;
      error += p.error;
    }
    value = acc.value();
  };
  recompute();

  const double eps = std::numeric_limits<double>::epsilon();
  std::size_t iter = 0;
  while (error > tol * abs(value) && error > 0.0) {
    if (panels.size() >= max_panels) {
      double best = 0.0;
      if constexpr (is_complex_v<Scalar>) {
        best = value.real();
      } else {
        best = value;
      }
      throw AccuracyError("integrate_semi_infinite: panel budget exhausted", best, error);
    }
    std::pop_heap(panels.begin(), panels.end());
    const auto worst = panels.back();
    const double mid = 0.5 * (worst.a + worst.b);
    // A panel a few ulps wide cannot be refined further.
    if (mid - worst.a <= 4.0 * eps * std::max(1.0, std::abs(mid))) {
      std::push_heap(panels.begin(), panels.end());
      break;
    }
    panels.pop_back();
    const auto left = detail::gk15<Scalar>(g, worst.a, mid);
    const auto right = detail::gk15<Scalar>(g, mid, worst.b);
    panels.push_back(left);
    std::push_heap(panels.begin(), panels.end());
    panels.push_back(right);
    std::push_heap(panels.begin(), panels.end());
    if (++iter % 64 == 0) {
      recompute();
    } else {
      value += (left.value + right.value) - worst.value;
      error += (left.error + right.error) - worst.error;
    }
  }
  recompute();
  return IntegralResult<Scalar>{value, error, evals};
}

/// Central-difference Wirtinger derivative dF/dzbar = (F_x + i F_y) / 2.
template <class F>
complex wirtinger_dbar_fd(F&& fn, complex z, double h = 1e-5) {
  const complex i(0.0, 1.0);
  const complex dx = (fn(z + h) - fn(z - h)) / (2.0 * h);
  const complex dy = (fn(z + i * h) - fn(z - i * h)) / (2.0 * h);
  return 0.5 * (dx + i * dy);
}

/// Smallest eigenvalue of a Hermitian matrix (Householder tridiagonalization
/// followed by implicit symmetric QR). Throws ValidationError if the input is
/// not Hermitian to 1e-12 relative to its largest entry.
double min_eigenvalue_hermitian(const Eigen::MatrixXcd& m);

}  // namespace hfs::numerics
