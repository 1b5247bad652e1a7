#include "support.hpp"

#include <numbers>

#include "hfs/error.hpp"
#include "hfs/expint.hpp"
#include "hfs/numerics.hpp"
#include "hfs/random.hpp"

using namespace hfs;
using hfs::test::complex;
using hfs::test::oracle;

TEST_CASE("E1 reference values") {
  CHECK(std::abs(expint::e1(1.0) - oracle().real("e1_1")) <= 1e-14);
  CHECK(std::abs(expint::e1(1.0) - 0.219383934395520) <= 1e-14);
  CHECK(test::rel_gap(expint::e1(2.0), oracle().real("e1_2")) <= 1e-14);
  const double big = std::exp(100.0) * expint::e1(100.0);
  CHECK(big > 1.0 / 101.0);
  CHECK(big <= 1.0 / 100.0);
  CHECK_THROWS_AS(expint::e1(0.0), DomainError);
  CHECK_THROWS_AS(expint::e1(-1.0), DomainError);
}

TEST_CASE("E1 complex") {
  CHECK(test::rel_gap(expint::e1(complex(2, 3)), oracle().value("e1_complex_2_plus_3i")) <= 1e-12);
  CHECK(test::rel_gap(expint::e1(complex(0.5, -0.25)), oracle().value("e1_complex_0p5_minus_0p25i")) <= 1e-12);
  CHECK(std::abs(expint::e1(complex(1.0, 0.0)) - expint::e1(1.0)) <= 1e-15);
  CHECK_THROWS_AS(expint::e1(complex(-1.0, 1.0)), DomainError);
}

TEST_CASE("E_n reference values") {
  CHECK(std::abs(expint::en(0, 1.0) - 0.367879441171442) <= 1e-15);
  CHECK(std::abs(expint::en(2, 1.0) - 0.148495506775922) <= 1e-15);
  CHECK(test::rel_gap(expint::en(2, 1.0), oracle().real("e2_1")) <= 1e-13);
  CHECK(test::rel_gap(expint::en(3, 10.0), oracle().real("e3_10")) <= 1e-13);
  CHECK(test::rel_gap(expint::en(20, 2.5), oracle().real("e20_2p5")) <= 1e-13);
  const double e5 = std::numbers::e * expint::en(5, 1.0);
  CHECK(e5 > 1.0 / 6.0);
  CHECK(e5 <= 1.0 / 5.0);
  CHECK_THROWS_AS(expint::en(-1, 1.0), DomainError);
}

TEST_CASE("en_family") {
  const auto f = expint::en_family(2, 1.0);
  REQUIRE(f.size() == 3);
  CHECK(std::abs(f[0] - std::exp(-1.0)) <= 1e-15);
  CHECK(std::abs(f[1] - oracle().real("e1_1")) <= 1e-15);
  CHECK(std::abs(f[2] - oracle().real("e2_1")) <= 1e-15);
  CHECK_THROWS_AS(expint::en_family(10001, 1.0), ConfigError);
}

TEST_CASE("property: recurrence n E_{n+1} = e^-x - x E_n") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const double x = rng.uniform(0.05, 30.0);
    const auto e = expint::en_family(200, x);
    const double emx = std::exp(-x);
    for (int n = 1; n < 200; ++n) {
      const double r = std::fma(x, e[n], std::fma(static_cast<double>(n), e[n + 1], -emx));
      CHECK(std::abs(r) <= 1e-15 * emx);
    }
  }
}

TEST_CASE("property: sandwich 1/(x+n) < e^x E_n(x) <= 1/(x+n-1)") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = rng.uniform(0.01, 50.0);
    const int n = rng.integer(1, 200);
    const double v = std::exp(x) * expint::en(n, x);
    CHECK(v > 1.0 / (x + n));
    CHECK(v <= 1.0 / (x + n - 1.0));
  }
}

TEST_CASE("incomplete gamma at integer order") {
  CHECK(std::abs(expint::incomplete_gamma_int(1, 1.0) - std::exp(-1.0)) <= 1e-16);
  CHECK(std::abs(expint::incomplete_gamma_int(2, 1.0) - 0.735758882342885) <= 1e-15);
  CHECK(test::rel_gap(expint::incomplete_gamma_int(3, 1.0), oracle().real("incgamma_3_1")) <= 1e-13);
  // E_{2-k}(1) = Gamma(k-1, 1) for k >= 2.
  for (int k = 2; k <= 20; ++k) {
    CHECK(test::rel_gap(expint::en_extended(2 - k, 1.0), expint::incomplete_gamma_int(k - 1, 1.0)) <= 1e-13);
  }
  const double q = numerics::integrate_semi_infinite([](double t) { return (1.0 + t) * (1.0 + t) * std::exp(-1.0 - t); }, 1e-13).value;
  CHECK(test::rel_gap(q, expint::incomplete_gamma_int(3, 1.0)) <= 1e-12);
}

TEST_CASE("laplace transform of E_n") {
  CHECK(std::abs(expint::laplace_en(1, 1.0) - 0.693147180559945) <= 1e-15);
  CHECK(std::abs(expint::laplace_en(1, 1e-12) - 1.0) <= 1e-11);
  CHECK(std::abs(expint::laplace_en(1, 0.0) - 1.0) <= 1e-16);
  CHECK(test::rel_gap(expint::laplace_en(2, 1.0), oracle().real("laplace_e2_1")) <= 1e-13);
  const double q = numerics::integrate_semi_infinite([](double t) { return std::exp(-t) * expint::en(2, t); }, 1e-12).value;
  CHECK(std::abs(expint::laplace_en(2, 1.0) - q) <= 1e-9);
  CHECK_THROWS_AS(expint::laplace_en(1, -1.0), DomainError);
  CHECK_THROWS_AS(expint::laplace_en(0, 1.0), DomainError);
}

TEST_CASE("property: laplace_en against quadrature") {
  for (double a : {-0.5, 0.1, 1.0, 3.0}) {
    for (int n = 1; n <= 10; ++n) {
      const double q = numerics::integrate_semi_infinite([a, n](double t) {
          const double e = expint::en(n, t);
          return e == 0.0 ? 0.0 : std::exp(-a * t) * e;  // avoid inf * 0 for a < 0
        }, 1e-12).value;
      CHECK(std::abs(expint::laplace_en(n, a) - q) <= 1e-9);
    }
  }
}
