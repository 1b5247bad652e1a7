#include "support.hpp"

#include <numbers>

#include "hfs/error.hpp"
#include "hfs/expint.hpp"
#include "hfs/moments.hpp"
#include "hfs/random.hpp"

using namespace hfs;
using hfs::test::complex;
using hfs::test::oracle;

TEST_CASE("eta reference values") {
  CHECK(std::abs(moments::eta_closed_form(0) - 0.403652637676806) <= 1e-14);
  CHECK(std::abs(moments::eta_closed_form(1) - 0.192694724646389) <= 1e-14);
  CHECK(std::abs(moments::eta_closed_form(2) - 0.210957913030419) <= 1e-14);
  CHECK(std::abs(moments::eta_closed_form(2) - (3.0 * moments::eta_closed_form(0) - 1.0)) <= 1e-15);
  const double e5 = moments::eta_closed_form(5);
  CHECK(e5 >= 0.46875);
  CHECK(e5 <= 4.8);
}

TEST_CASE("eta against the oracle file for n <= 60") {
  for (int n = 0; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(test::rel_gap(moments::eta_closed_form(n), oracle().real("eta_" + std::to_string(n))) <= 1e-12);
  }
}

TEST_CASE("three routes agree") {
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(test::rel_gap(moments::eta_quadrature(n), moments::eta_closed_form(n)) <= 1e-10);
  }
  for (int n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(test::rel_gap(moments::eta_binomial(n), moments::eta_closed_form(n)) <= 1e-8);
  }
  CHECK(std::abs(moments::eta_binomial(0) - (1.0 - std::numbers::e * expint::e1(1.0))) <= 1e-15);
  CHECK(test::rel_gap(moments::eta_binomial(10), moments::eta_quadrature(10)) <= 1e-8);
  CHECK_THROWS_AS(moments::eta_binomial(26), PrecisionError);
}

TEST_CASE("eta_table") {
  const auto t0 = moments::eta_table(0);
  CHECK(t0.n_max == 0);
  CHECK(t0.eta.size() == 1);

  const auto t = moments::eta_table(300);
  CHECK(t.log_eta.allFinite());
  for (int n = 0; n <= 300; ++n) CHECK(t.overflow(n) == (n >= 171));
  CHECK(std::isinf(t.eta[171]));
  CHECK(std::isfinite(t.eta[170]));
}

TEST_CASE("property: bounds hold in log space") {
  const auto t = moments::closed_form_table(4000);
  for (int n = 0; n <= 4000; ++n) {
    CHECK(moments::log_lower_bound(n) <= t.log_eta[n]);
    CHECK(t.log_eta[n] <= moments::log_upper_bound(n));
    if (n >= 1) CHECK(t.log_eta[n] <= moments::log_sharp_upper_bound(n));
  }
}

TEST_CASE("property: residuals lie in (0, 1/n] and match the direct formula") {
  const Eigen::VectorXd r = moments::residual_sequence(101);
  for (int n = 1; n <= 101; ++n) {
    CHECK(r[n] > 0.0);
    CHECK(r[n] <= 1.0 / n);
    const double direct = std::numbers::e * (n + 1.0) * expint::en(n, 1.0) - 1.0;
    CHECK(std::abs(r[n] - direct) <= 1e-13);
  }
}

TEST_CASE("property: eta_{n+1} = e n! E_{n+1}(1) - eta_n") {
  for (int n = 0; n <= 30; ++n) {
    const double rhs = std::numbers::e * std::tgamma(n + 1.0) * expint::en(n + 1, 1.0) - moments::eta_closed_form(n);
    CHECK(test::rel_gap(rhs, moments::eta_closed_form(n + 1)) <= 1e-11);
  }
}

TEST_CASE("log eta is increasing from n = 2") {
  const auto& t = moments::shared_table();
  CHECK(t.eta[0] > t.eta[1]);
  CHECK(t.eta[1] < t.eta[2]);
  for (int n = 3; n <= t.n_max; ++n) CHECK(t.log_eta[n] > t.log_eta[n - 1]);
}

TEST_CASE("factorial sum") {
  CHECK(std::abs(moments::eta_factorial_sum(0) - oracle().real("eta_0")) <= 1e-15);
  for (int N : {10, 100, 1000}) {
    const double s = moments::eta_factorial_sum(N);
    CHECK(s <= 1.0);
    CHECK(1.0 - s <= 1.1 / N);
  }
  double prev = 0.0;
  for (int N = 0; N <= 200; ++N) {
    const double s = moments::eta_factorial_sum(N);
    CHECK(s >= prev);
    prev = s;
  }
}

TEST_CASE("generating function") {
  CHECK(std::abs(moments::generating_S(0.0) - oracle().real("eta_0")) <= 1e-15);
  CHECK(std::abs(moments::gfs_rhs(0.0) - oracle().real("eta_0")) <= 1e-15);
  const double at1 = 1.0 - 2.0 * std::exp(2.0) * oracle().real("e1_2");
  CHECK(std::abs(moments::gfs_rhs(1.0) - at1) <= 1e-13);
  CHECK(test::rel_gap(moments::gfs_rhs(1.0), oracle().value("gfs_rhs_1")) <= 1e-12);
  CHECK(std::abs(moments::generating_S(-0.5) - moments::gfs_rhs(-0.5)) <= 1e-10);
  CHECK_THROWS_AS(moments::gfs_rhs(-1.0), DomainError);
  CHECK_THROWS_AS(moments::gfs_rhs(complex(-2.0, 1.0)), DomainError);
}

TEST_CASE("property: series and closed form agree on Re z > -0.9") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    complex z;
    do {
      z = rng.disk(5.0);
    } while (!(z.real() > -0.9));
    CAPTURE(z);
    CHECK(std::abs(moments::generating_S(z) - moments::gfs_rhs(z)) <= 1e-9);
  }
}

TEST_CASE("technical lemma") {
  const auto [l0, r0] = moments::techlemma_check(0);
  CHECK(std::abs(l0 - oracle().real("e1_1")) <= 1e-13);
  CHECK(std::abs(r0 - oracle().real("e1_1")) <= 1e-13);
  const auto [l1, r1] = moments::techlemma_check(1);
  CHECK(std::abs(l1 - 0.148495507) <= 1e-9);
  CHECK(std::abs(r1 - 0.148495507) <= 1e-9);
  for (int n = 0; n <= 20; ++n) {
    const auto [l, r] = moments::techlemma_check(n);
    CHECK(test::rel_gap(l, r) <= 1e-9);
  }
  CHECK(test::rel_gap(moments::techlemma_check(10).first, oracle().real("techlemma_10")) <= 1e-9);
}
