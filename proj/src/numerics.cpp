#include "hfs/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace hfs::numerics {

namespace {

// log of 1 / sum_{k<n} p_k(x)^2 for orthonormal polynomials generated by
// step(k, p_k, p_{k-1}) -> p_{k+1}. The sum is accumulated with a running
// power-of-two rescaling so that it neither overflows nor underflows.
template <class Step>
double christoffel_log_weight(int n, double p0, double p1, Step&& step) {
  double prev = p0;
  double cur = p1;
  double sum = p0 * p0;
  double log_scale = 0.0;  // true values = stored * exp(log_scale)
  for (int k = 1; k < n; ++k) {
    sum += cur * cur;
    const double next = step(k, cur, prev);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 0x1p+300 || std::abs(prev) > 0x1p+300) {
      prev = std::ldexp(prev, -300);
      cur = std::ldexp(cur, -300);
      sum = std::ldexp(sum, -600);
      log_scale += 300.0 * std::numbers::ln2;
    }
  }
  return -(std::log(sum) + 2.0 * log_scale);
}

Eigen::VectorXd tridiagonal_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub) {
  if (diag.size() == 1) return diag;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw AccuracyError("Jacobi matrix eigensolver did not converge", 0.0, 0.0);
  }
  return solver.eigenvalues();
}

void check_order(int n, const char* who) {
  if (n < 1 || n > 512) {
    throw ConfigError(std::string(who) + ": order must lie in [1, 512], got " + std::to_string(n));
  }
}

void finish_weights(QuadratureRule& rule) {
  rule.weights = rule.log_weights.array().exp().matrix();
}

}  // namespace

QuadratureRule gauss_laguerre_rule(int n) {
  check_order(n, "gauss_laguerre_rule");
  QuadratureRule rule;
  rule.kind = QuadratureKind::laguerre;

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) sub[k - 1] = k;
  rule.nodes = tridiagonal_eigenvalues(diag, sub);

  rule.log_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    // Laguerre polynomials are orthonormal for exp(-t):
    // (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
    rule.log_weights[i] = christoffel_log_weight(n, 1.0, 1.0 - x, [x](int k, double lk, double lkm1) {
      return ((2.0 * k + 1.0 - x) * lk - k * lkm1) / (k + 1.0);
    });
  }
  finish_weights(rule);
  return rule;
}

QuadratureRule gauss_hermite_rule(int n) {
  check_order(n, "gauss_hermite_rule");
  QuadratureRule rule;
  rule.kind = QuadratureKind::hermite;

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  Eigen::VectorXd raw = tridiagonal_eigenvalues(diag, sub);
  // The rule is symmetric about 0; enforce it exactly.
  rule.nodes.resize(n);
  for (int i = 0; i < n; ++i) rule.nodes[i] = 0.5 * (raw[i] - raw[n - 1 - i]);

  const double p0 = std::pow(std::numbers::pi, -0.25);
  rule.log_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    rule.log_weights[i] =
        christoffel_log_weight(n, p0, std::sqrt(2.0) * x * p0, [x](int k, double pk, double pkm1) {
          return x * std::sqrt(2.0 / (k + 1.0)) * pk - std::sqrt(k / (k + 1.0)) * pkm1;
        });
  }
  finish_weights(rule);
  return rule;
}

double min_eigenvalue_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw ValidationError("min_eigenvalue_hermitian: matrix is not square");
  if (m.size() == 0) throw ValidationError("min_eigenvalue_hermitian: empty matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-12 * scale)) {
    throw ValidationError("min_eigenvalue_hermitian: matrix is not Hermitian (max |M - M^H| = " +
                          std::to_string(asym) + ")");
  }
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw AccuracyError("min_eigenvalue_hermitian: eigensolver did not converge", 0.0, 0.0);
  }
  return solver.eigenvalues().minCoeff();
}

}  // namespace hfs::numerics
