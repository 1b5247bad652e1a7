#include "support.hpp"

#include <numbers>

#include "hfs/error.hpp"
#include "hfs/hfock.hpp"
#include "hfs/numerics.hpp"
#include "hfs/random.hpp"

using namespace hfs;
using hfs::test::complex;

TEST_CASE("gauss-laguerre small rules") {
  const auto one = numerics::gauss_laguerre_rule(1);
  REQUIRE(one.size() == 1);
  CHECK(one.nodes[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  const auto two = numerics::gauss_laguerre_rule(2);
  const double expect[] = {1.0, 1.0, 2.0, 6.0};
  for (int k = 0; k < 4; ++k) {
    CHECK(two.apply([k](double x) { return std::pow(x, k); }) == doctest::Approx(expect[k]).epsilon(1e-14));
  }
}

TEST_CASE("gauss-laguerre 64 nodes reaches eta_0 to 1e-6") {
  const auto rule = numerics::gauss_laguerre_rule(64);
  const double v = rule.apply([](double t) { return 1.0 / ((1.0 + t) * (1.0 + t)); });
  CHECK(std::abs(v - test::oracle().real("eta_0")) <= 1e-6);
}

TEST_CASE("gauss-hermite small rules") {
  const auto one = numerics::gauss_hermite_rule(1);
  CHECK(std::abs(one.nodes[0]) <= 1e-15);
  CHECK(one.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));

  const auto three = numerics::gauss_hermite_rule(3);
  CHECK(three.apply([](double x) { return x * x; }) == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-14));

  const auto forty = numerics::gauss_hermite_rule(40);
  CHECK(std::abs(forty.apply([](double) { return 1.0 / std::sqrt(std::numbers::pi); }) - 1.0) <= 1e-12);
}

TEST_CASE("log weights stay finite where linear weights underflow") {
  const auto rule = numerics::gauss_laguerre_rule(200);
  CHECK(rule.log_weights.allFinite());
  CHECK(rule.weights[rule.size() - 1] < 1e-300);
}

TEST_CASE("quadrature orders are validated") {
  CHECK_THROWS_AS(numerics::gauss_laguerre_rule(0), ConfigError);
  CHECK_THROWS_AS(numerics::gauss_hermite_rule(0), ConfigError);
}

TEST_CASE("integrate_semi_infinite") {
  const auto a = numerics::integrate_semi_infinite([](double t) { return std::exp(-t); }, 1e-12);
  CHECK(std::abs(a.value - 1.0) <= 1e-12);
  const auto b = numerics::integrate_semi_infinite([](double t) { return std::exp(-t) / ((1 + t) * (1 + t)); }, 1e-12);
  CHECK(std::abs(b.value - test::oracle().real("eta_0")) <= 1e-12);
  const auto c = numerics::integrate_semi_infinite([](double t) { return t * std::exp(-t) / ((1 + t) * (1 + t)); }, 1e-12);
  CHECK(std::abs(c.value - test::oracle().real("eta_1")) <= 1e-12);
  CHECK_THROWS_AS(numerics::integrate_semi_infinite([](double t) { return std::exp(-t); }, 0.0), ConfigError);
}

TEST_CASE("integrate_semi_infinite handles complex integrands") {
  // int e^{-(1 - i) t} dt = 1 / (1 - i)
  const auto r = numerics::integrate_semi_infinite([](double t) { return std::exp(-complex(1.0, -1.0) * t); }, 1e-12);
  CHECK(std::abs(r.value - 1.0 / complex(1.0, -1.0)) <= 1e-12);
}

TEST_CASE("property: Laguerre rule integrates t^k for k <= 2n - 1") {
  Rng rng(20240611);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(1, 30);
    const int k = rng.integer(0, 2 * n - 1);
    const auto rule = numerics::gauss_laguerre_rule(n);
    const double m = rule.apply([k](double x) { return std::pow(x, k); });
    CHECK(test::rel_gap(m, std::tgamma(k + 1.0)) <= 1e-12);
  }
}

TEST_CASE("wirtinger derivative") {
  CHECK(std::abs(numerics::wirtinger_dbar_fd([](complex z) { return z; }, complex(0.4, -1.1))) <= 1e-9);
  CHECK(std::abs(numerics::wirtinger_dbar_fd([](complex z) { return std::conj(z); }, complex(1, 2)) - 1.0) <= 1e-9);
  const complex z(0.3, 0.1);
  CHECK(std::abs(numerics::wirtinger_dbar_fd([](complex w) { return std::conj(w) * std::exp(w); }, z) - std::exp(z)) <= 1e-6);
}

TEST_CASE("property: wirtinger derivative annihilates random polynomials") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<complex> c(static_cast<std::size_t>(rng.integer(1, 6)));
    for (auto& v : c) v = rng.unit_square();
    const auto p = hfock::EntireSeries::from(c);
    CHECK(std::abs(numerics::wirtinger_dbar_fd(p, rng.disk(2.0))) <= 1e-8);
  }
}

TEST_CASE("min_eigenvalue_hermitian") {
  CHECK(numerics::min_eigenvalue_hermitian(Eigen::MatrixXcd::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-15));
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d.diagonal() << 2.0, 0.5, -1.0;
  CHECK(numerics::min_eigenvalue_hermitian(d) == doctest::Approx(-1.0).epsilon(1e-15));

  Eigen::MatrixXcd bad(2, 2);
  bad << 1.0, complex(0, 1), complex(0, 1), 1.0;
  CHECK_THROWS_AS(numerics::min_eigenvalue_hermitian(bad), ValidationError);
}

TEST_CASE("property: 2x2 Hermitian minimum eigenvalue matches the closed form") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.uniform(-2, 2), d = rng.uniform(-2, 2);
    const complex b = rng.unit_square();
    Eigen::MatrixXcd m(2, 2);
    m << a, b, std::conj(b), d;
    const double exact = 0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    CHECK(std::abs(numerics::min_eigenvalue_hermitian(m) - exact) <= 1e-12);
  }
}
