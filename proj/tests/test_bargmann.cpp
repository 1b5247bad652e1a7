#include "support.hpp"

#include <numbers>

#include "hfs/bargmann.hpp"
#include "hfs/error.hpp"
#include "hfs/hfock.hpp"
#include "hfs/numerics.hpp"
#include "hfs/random.hpp"

using namespace hfs;
using hfs::test::complex;
using hfs::test::oracle;

TEST_CASE("Hermite functions at the origin") {
  const auto h0 = bargmann::hermite_psi(0, 0.0);
  CHECK(std::abs(h0.values[0] - 0.751126) <= 1e-6);
  CHECK(test::rel_gap(bargmann::pi_minus_quarter(), oracle().real("pi_minus_quarter")) <= 1e-15);
  const auto h1 = bargmann::hermite_psi(1, 0.0);
  CHECK(h1.values[1] == 0.0);
  CHECK_THROWS_AS(bargmann::hermite_psi(1001, 0.0), ConfigError);
  CHECK_THROWS_AS(bargmann::hermite_psi(10, 41.0), DomainError);
}

TEST_CASE("Hermite orthonormality, 41 x 41") {
  const auto rule = numerics::gauss_hermite_rule(200);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(41, 41);
  for (Eigen::Index i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    const Eigen::VectorXd psi = bargmann::hermite_psi(40, x).values;
    gram += std::exp(rule.log_weights[i] + x * x) * psi * psi.transpose();
  }
  CHECK((gram - Eigen::MatrixXd::Identity(41, 41)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("property: Hermite envelope and recurrence far from the origin") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const double x = rng.uniform(-40.0, 40.0);
    const auto h = bargmann::hermite_psi(1000, x);
    CHECK(h.values.cwiseAbs().maxCoeff() <= 1.0);
    for (int n = 1; n < 1000; ++n) {
      const double rhs = x * std::sqrt(2.0 / (n + 1.0)) * h.values[n] - std::sqrt(n / (n + 1.0)) * h.values[n - 1];
      const double scale = std::abs(h.values[n + 1]) + std::abs(x * h.values[n]) + std::abs(h.values[n - 1]);
      if (scale > 1e-280) CHECK(std::abs(h.values[n + 1] - rhs) <= 1e-13 * scale);
    }
  }
}

TEST_CASE("Bargmann image of the kernel") {
  const double x = 0.8;
  CHECK(std::abs(bargmann::bargmann_A(0.0, x) - bargmann::hermite_psi(0, x).values[0] / std::sqrt(oracle().real("eta_0"))) <= 1e-15);
  // Odd Hermite functions vanish at 0: A_z(0) is even in z.
  CHECK(std::abs(bargmann::bargmann_A(1.0, 0.0) - bargmann::bargmann_A(-1.0, 0.0)) <= 1e-14);
  CHECK(std::abs(bargmann::bargmann_A(0.5, 1.0) - bargmann::bargmann_A_truncated(0.5, 1.0, 80)) <= 1e-10);
  CHECK_THROWS_AS(bargmann::bargmann_A(11.0, 0.0), DomainError);
}

TEST_CASE("L2 norm of A_z equals E(|z|^2)") {
  CHECK(std::abs(bargmann::l2_norm_A_sq(0.0) - 1.0 / oracle().real("eta_0")) <= 1e-10);
  for (double r : {0.5, 1.0, 1.5}) {
    const double e = hfock::eval_E(r * r).real();
    CHECK(std::abs(bargmann::l2_norm_A_sq(r) - e) / e <= 1e-8);
  }
  const double e = hfock::eval_E(2.25).real();
  CHECK(std::abs(bargmann::l2_norm_A_sq(complex(0.0, 1.5)) - e) / e <= 1e-8);
  CHECK_THROWS_AS(bargmann::l2_norm_A_sq(0.5, 50), ConfigError);
}

TEST_CASE("property: L2 norm is rotation invariant") {
  Rng rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    const double r = rng.uniform(0.0, 1.8);
    const double base = bargmann::l2_norm_A_sq(r);
    const double rotated = bargmann::l2_norm_A_sq(std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi)));
    CHECK(std::abs(rotated - base) / base <= 1e-10);
  }
}

TEST_CASE("classical generating function") {
  const auto [l0, r0] = bargmann::classical_gf_check(0.0, 0.7);
  CHECK(std::abs(l0 - r0) <= 1e-15);
  const auto [l1, r1] = bargmann::classical_gf_check(1.0, 0.0);
  CHECK(std::abs(r1 - bargmann::pi_minus_quarter() * std::exp(-0.5)) <= 1e-15);
  CHECK(std::abs(l1 - r1) <= 1e-14);
  const auto [li, ri] = bargmann::classical_gf_check(complex(0, 1), 1.0);
  CHECK(std::abs(li - ri) <= 1e-10);
  // The normalised family carries exactly pi^{-1/4} relative to the textbook generating function.
  const complex z(0.3, -0.4);
  CHECK(std::abs(bargmann::classical_gf_check(z, 1.1).first / bargmann::classical_gf_unnormalized(z, 1.1) -
                 0.7511255444649425) <= 1e-13);
}

TEST_CASE("property: classical generating function on random points") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const complex z = rng.disk(3.0);
    const double x = rng.uniform(-5.0, 5.0);
    const auto [l, r] = bargmann::classical_gf_check(z, x);
    CHECK(std::abs(l - r) <= 1e-10);
  }
}

TEST_CASE("weighted generating function at z = 0") {
  for (double x : {-2.0, 0.0, 1.5}) {
    const auto [l, r] = bargmann::weighted_gf_pair(0.0, x);
    CHECK(std::abs(l - r) <= 1e-14);
    CHECK(std::abs(l - oracle().real("eta_0") * bargmann::hermite_psi(0, x).values[0]) <= 1e-15);
  }
}

TEST_CASE("weighted generating function for small z") {
  for (complex z : {complex(0.05, 0.0), complex(0.1, 0.0), complex(0.06, -0.04)}) {
    for (double x : {0.0, 0.5, 1.0}) {
      const auto [l, r] = bargmann::weighted_gf_pair(z, x, 60);
      CHECK(std::abs(l - r) <= 1e-7 * (1.0 + std::abs(r)));
    }
  }
}

// The coefficients eta_n / sqrt(n!) grow like sqrt(n!) / n^2, so the series
// sum_n eta_n z^n psi_n(x) / sqrt(n!) has radius of convergence 0. For small z
// the partial sums approach the integral before they turn away; at z = 0.5
// and z = 1 the gap only grows with N.
TEST_CASE("weighted generating function is asymptotic, not convergent") {
  double prev = 0.0;
  for (int N : {20, 40, 60}) {
    const auto [l, r] = bargmann::weighted_gf_pair(0.5, 0.0, N);
    const double gap = std::abs(l - r);
    CHECK(gap > prev);
    prev = gap;
  }
  CHECK(prev > 1e-7);
  const auto [l1, r1] = bargmann::weighted_gf_pair(1.0, 1.0, 60);
  CHECK(std::abs(l1 - r1) > 1e-7);
  // The right-hand side itself is well defined and finite.
  CHECK(std::isfinite(std::abs(r1)));
}

TEST_CASE("weighted generating function arguments") {
  CHECK_THROWS_AS(bargmann::weighted_gf_pair(complex(0.0, 1.0), 0.0), DomainError);
  CHECK_THROWS_AS(bargmann::weighted_gf_pair(3.0, 0.0), DomainError);
  CHECK_THROWS_AS(bargmann::weighted_gf_pair(0.5, 6.0), DomainError);
}
