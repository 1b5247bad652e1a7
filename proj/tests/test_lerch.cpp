#include "support.hpp"

#include <numbers>

#include "hfs/error.hpp"
#include "hfs/expint.hpp"
#include "hfs/lerch.hpp"
#include "hfs/moments.hpp"
#include "hfs/numerics.hpp"
#include "hfs/random.hpp"

using namespace hfs;
using hfs::test::complex;
using hfs::test::oracle;

TEST_CASE("phi reference values") {
  for (int n = 1; n <= 5; ++n) CHECK(lerch::phi(n, 0.0) == complex(1.0 / n));
  CHECK(std::abs(lerch::phi(1, 0.5) - 1.386294361119891) <= 1e-12);
  CHECK(std::abs(lerch::phi(1, 0.5, 1e-16).real() - oracle().real("two_log2")) <= 1e-14);
  CHECK(std::abs(lerch::phi(2, -0.9) - expint::laplace_en(2, 0.9)) <= 1e-9);
  CHECK_THROWS_AS(lerch::phi(0, 0.1), DomainError);
  CHECK_THROWS_AS(lerch::phi(1, complex(0.0, 1.0)), DomainError);
}

TEST_CASE("phi_tilde") {
  for (int n = 1; n <= 4; ++n) CHECK(lerch::phi_tilde(n, 0.0) == complex(1.0));
  CHECK(std::abs(lerch::phi_tilde(1, 0.5) - 2.0 * std::numbers::ln2) <= 1e-12);
  // slope at 0 is n / (n + 1)
  const double h = 1e-5;
  const double d = ((lerch::phi_tilde(3, h) - lerch::phi_tilde(3, -h)) / (2 * h)).real();
  CHECK(std::abs(d - 0.75) <= 1e-8);
}

TEST_CASE("property: phi_1(x) x = -log(1 - x)") {
  for (int i = -90; i <= 90; ++i) {
    if (i == 0) continue;
    const double x = i / 100.0;
    CHECK(std::abs(lerch::phi(1, x).real() * x + std::log1p(-x)) <= 1e-11);
  }
}

TEST_CASE("property: phi_n(-a) is the Laplace transform of E_n") {
  for (int n = 1; n <= 5; ++n) {
    for (double a : {0.25, 0.5, 0.9, 2.0, 4.0}) {
      const double q = numerics::integrate_semi_infinite([a, n](double t) { return std::exp(-a * t) * expint::en(n, t); }, 1e-12).value;
      CHECK(std::abs(lerch::phi(n, -a).real() - q) <= 1e-8);
    }
  }
}

TEST_CASE("property: Phi(z, 1, n) = phi_n(z)") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const complex z = rng.disk(0.95);
    const int n = rng.integer(1, 5);
    CHECK(std::abs(lerch::lerch_phi(z, 1.0, n) - lerch::phi(n, z)) <= 1e-12);
  }
}

TEST_CASE("Lerch transcendent") {
  CHECK(std::abs(lerch::lerch_phi(0.0, 2.0, 3.0) - 1.0 / 9.0) <= 1e-16);
  CHECK(std::abs(lerch::lerch_phi(0.5, 2.0, 1.0) - lerch::lerch_phi_integral(0.5, 2.0, 1.0)) <= 1e-8);
  CHECK(test::rel_gap(lerch::lerch_phi(0.5, 2.0, 1.0).real(), oracle().real("lerch_0p5_2_1")) <= 1e-12);
  CHECK_THROWS_AS(lerch::lerch_phi_integral(0.5, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(lerch::lerch_phi(0.5, 2.0, 0.0), DomainError);
}

TEST_CASE("Hurwitz zeta") {
  const double z2 = std::numbers::pi * std::numbers::pi / 6.0;
  CHECK(std::abs(lerch::hurwitz_zeta(2.0, 1.0) - 1.644934066848226) <= 1e-10);
  CHECK(std::abs(lerch::hurwitz_zeta(2.0, 1.0) - oracle().real("zeta_2_1")) <= 1e-10);
  CHECK(std::abs(lerch::hurwitz_zeta(2.0, 2.0) - (z2 - 1.0)) <= 1e-10);
  CHECK(std::abs(lerch::hurwitz_zeta(3.0, 1.0) - lerch::hurwitz_zeta_integral(3.0, 1.0)) <= 1e-9);
  CHECK(std::abs(lerch::hurwitz_zeta(3.0, 1.0) - oracle().real("zeta_3_1")) <= 1e-10);
  CHECK_THROWS_AS(lerch::hurwitz_zeta(1.0, 1.0), DomainError);
}

TEST_CASE("Dirichlet kernel identity") {
  const double h = std::sqrt(0.5);
  const auto [a, b] = lerch::dirichlet_identity_check(h, h);
  CHECK(std::abs(a - 2.0 * std::numbers::ln2) <= 1e-11);
  CHECK(std::abs(b - 2.0 * std::numbers::ln2) <= 1e-14);
  const auto [c, d] = lerch::dirichlet_identity_check(0.6, complex(0.0, 0.7));
  CHECK(std::abs(c - d) <= 1e-11);
  CHECK(lerch::phi(1, 0.0) == complex(1.0));
  CHECK_THROWS_AS(lerch::dirichlet_identity_check(0.0, 0.5), DomainError);
}

TEST_CASE("complete monotonicity evidence") {
  const auto grid = lerch::uniform_grid(0.1, 0.1, 50);
  CHECK(lerch::cm_evidence(1, grid, 4).pass);
  for (int n = 1; n <= 3; ++n) {
    const auto rep = lerch::cm_evidence(n, grid, 6);
    CHECK(rep.pass);
    CHECK(rep.violations.size() == 7);
  }
  // An increasing function fails at order 1.
  std::vector<double> up(20);
  for (int i = 0; i < 20; ++i) up[i] = i;
  const auto bad = lerch::cm_differences(up, 2);
  CHECK_FALSE(bad.pass);
  CHECK(bad.violations[1] > 0);
  const std::vector<double> uneven{0.1, 0.2, 0.4};
  CHECK_THROWS_AS(lerch::cm_evidence(1, uneven, 1), ConfigError);
}

TEST_CASE("Gram matrices of the disk kernels") {
  const std::vector<complex> origin{0.0};
  for (int n = 1; n <= 3; ++n) CHECK(std::abs(lerch::gram_phi(n, origin).min_eig - 1.0 / n) <= 1e-15);
  const std::vector<complex> dup{complex(0.3, 0.2), complex(0.3, 0.2)};
  const auto gd = lerch::gram_phi(1, dup);
  CHECK(gd.psd());
  Rng rng(55);
  for (int n = 1; n <= 3; ++n) {
    for (int s = 0; s < 5; ++s) CHECK(lerch::gram_phi(n, rng.disk_points(30, 0.95)).psd());
  }
  const std::vector<complex> edge{0.9995};
  CHECK_THROWS_AS(lerch::gram_phi(1, edge), DomainError);
}

TEST_CASE("ML audit") {
  const auto a = lerch::ml_condition_audit(lerch::MlKernel::phi_tilde, 1);
  REQUIRE(a.conditions.size() == 3);
  CHECK(a.conditions[0].status == lerch::Status::pass);
  CHECK(a.conditions[1].status == lerch::Status::pass);
  CHECK(a.conditions[2].status == lerch::Status::evidence);
  CHECK(a.conditions[2].details.find("consistent") != std::string::npos);
  CHECK(a.value_at_0 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a.derivative_at_0 == doctest::Approx(0.5).epsilon(1e-14));

  const auto k = lerch::ml_condition_audit(lerch::MlKernel::eta0_K);
  CHECK(k.conditions[0].status == lerch::Status::pass);
  CHECK(k.conditions[1].status == lerch::Status::pass);
  CHECK(k.conditions[2].status == lerch::Status::evidence);
  CHECK(std::abs(k.derivative_at_0 - 2.0947) <= 1e-4);
  CHECK(std::abs(k.derivative_at_0 - oracle().real("eta_0") / oracle().real("eta_1")) <= 1e-14);
}
