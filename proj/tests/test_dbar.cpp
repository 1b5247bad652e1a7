#include "support.hpp"

#include <numbers>

#include "hfs/dbar.hpp"
#include "hfs/error.hpp"
#include "hfs/random.hpp"

using namespace hfs;
using dbar::PolyanalyticSeries;
using hfock::EntireSeries;
using hfs::test::complex;
using hfs::test::oracle;

namespace {

EntireSeries random_poly(Rng& rng, int degree) {
  std::vector<complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = rng.unit_square();
  return EntireSeries::from(c);
}

}  // namespace

TEST_CASE("polyanalytic evaluation") {
  auto zbar = PolyanalyticSeries::zeros(2, 0);
  zbar.coeffs(1, 0) = 1.0;
  CHECK(std::abs(dbar::eval_poly(zbar, complex(1, 2)) - complex(1, -2)) <= 1e-15);

  auto zbar_z = PolyanalyticSeries::zeros(2, 1);
  zbar_z.coeffs(1, 1) = 1.0;
  CHECK(std::abs(dbar::eval_poly(zbar_z, complex(0, 2)) - 4.0) <= 1e-15);

  Rng rng(61);
  auto p = PolyanalyticSeries::zeros(2, 6);
  for (Eigen::Index k = 0; k < 2; ++k) {
    for (Eigen::Index j = 0; j <= 6; ++j) p.coeffs(k, j) = rng.unit_square();
  }
  const complex z(0.3, 0.4);
  complex direct = 0.0;
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j <= 6; ++j) direct += std::pow(std::conj(z), k) * std::pow(z, j) * p.coeffs(k, j);
  }
  CHECK(std::abs(dbar::eval_poly(p, z) - direct) <= 1e-13);
}

TEST_CASE("polyanalytic Fock kernels") {
  Rng rng(62);
  for (int i = 0; i < 10; ++i) {
    const complex z = rng.disk(2.0), w = rng.disk(2.0);
    CHECK(std::abs(dbar::fock_poly_kernel(1, z, w) - std::exp(z * std::conj(w))) <= 1e-14 * std::abs(std::exp(z * std::conj(w))));
    CHECK(test::rel_gap(dbar::fock_poly_kernel(2, z, z), complex(2.0 * std::exp(std::norm(z)))) <= 1e-14);
  }
  // |z - w|^2 = 2 is a zero of F_2.
  CHECK(std::abs(dbar::fock_poly_kernel(2, 0.0, std::sqrt(2.0))) <= 1e-15);
  CHECK_THROWS_AS(dbar::fock_poly_kernel(0, 0.0, 0.0), ConfigError);
  CHECK_THROWS_AS(dbar::fock_poly_kernel(21, 0.0, 0.0), ConfigError);

  const auto pts = rng.disk_points(20, 2.0);
  const auto g = hfock::make_gram(
      pts, [](complex z, complex w) { return dbar::fock_poly_kernel(2, z, w); },
      [](complex z) { return dbar::fock_poly_kernel(2, z, z).real(); });
  CHECK(g.psd());
}

TEST_CASE("assembled solutions") {
  const auto u = dbar::assemble_solution(EntireSeries::from({1.0}), EntireSeries::from({0.0}));
  CHECK(u.order == 2);
  CHECK(u.coeffs(1, 0) == complex(1.0));
  CHECK(u.coeffs(0, 0) == complex(0.0));

  const complex w(0.5, -0.2);
  const auto fw = dbar::fw_series(w, 20);
  const auto ufw = dbar::assemble_solution(fw, EntireSeries::from({0.0}));
  for (int j = 0; j <= 20; ++j) {
    CHECK(std::abs(ufw.coeffs(1, j) - std::pow(std::conj(w), j) / std::tgamma(j + 1.0)) <= 1e-16);
  }

  const auto g = dbar::assemble_solution(EntireSeries::from({0.0, 1.0}), EntireSeries::from({1.0, 1.0}));
  CHECK(g.coeffs(0, 0) == complex(1.0));
  CHECK(g.coeffs(0, 1) == complex(1.0));
  CHECK(g.coeffs(1, 1) == complex(1.0));
  CHECK(g.coeffs(1, 0) == complex(0.0));
}

TEST_CASE("residual checks") {
  Rng rng(63);
  const auto samples = rng.disk_points(10, 2.0);
  auto zbar = PolyanalyticSeries::zeros(2, 0);
  zbar.coeffs(1, 0) = 1.0;
  CHECK(dbar::dbar_residual(zbar, EntireSeries::from({1.0}), samples, 1e-5, 1e-9).pass);

  const auto fw = dbar::fw_series(0.5, 20);
  const auto u = dbar::assemble_solution(fw, EntireSeries::from({0.2, complex(0, 1)}));
  const auto rep = dbar::dbar_residual(u, fw, samples);
  CHECK(rep.pass);
  CHECK(rep.numeric_max <= 1e-6);
  CHECK(rep.numeric.size() == samples.size());

  auto zbar2 = PolyanalyticSeries::zeros(3, 0);
  zbar2.coeffs(2, 0) = 1.0;
  CHECK_FALSE(dbar::dbar_residual(zbar2, EntireSeries::from({1.0}), samples).pass);

  CHECK_THROWS_AS(dbar::dbar_residual(zbar, EntireSeries::from({1.0}), samples, 1e-2), ConfigError);
  const std::vector<complex> far{4.0};
  CHECK_THROWS_AS(dbar::dbar_residual(zbar, EntireSeries::from({1.0}), far), DomainError);
}

TEST_CASE("property: assembled solutions pass, perturbed ones are flagged") {
  Rng rng(64);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_poly(rng, rng.integer(0, 8));
    const auto u0 = random_poly(rng, rng.integer(0, 8));
    const auto u = dbar::assemble_solution(f, u0);
    const auto pts = rng.disk_points(10, 2.0);
    const auto rep = dbar::dbar_residual(u, f, pts);
    CHECK(rep.pass);
    CHECK(rep.symbolic_max == 0.0);
    auto bad = u;
    bad.coeffs(1, rng.integer(0, static_cast<int>(bad.coeffs.cols()) - 1)) += 0.1;
    CHECK_FALSE(dbar::dbar_residual(bad, f, pts).pass);
  }
}

TEST_CASE("weight M") {
  CHECK(std::abs(dbar::weight_M(EntireSeries::from({1.0})).value - std::numbers::pi) <= 1e-15);
  CHECK(dbar::weight_M(EntireSeries::from({1.0}), dbar::Convention::normalized).value == 1.0);
  CHECK(std::abs(dbar::weight_M(EntireSeries::monomial(1)).value - std::numbers::pi) <= 1e-15);
  const auto m = dbar::weight_M(dbar::fw_series(1.0, 30), dbar::Convention::normalized);
  CHECK(std::abs(m.value - std::numbers::e) <= 1e-10);
  CHECK(dbar::fw_weight_tail(1.0, 30) <= 1e-30);
  const auto big = dbar::weight_M(EntireSeries::monomial(400));
  CHECK(std::isinf(big.value));
  CHECK(std::isfinite(big.log_value));
}

TEST_CASE("space membership for u0") {
  const auto zero = dbar::hfp_membership_check(EntireSeries::from({0.0}), EntireSeries::from({1.0}));
  CHECK(zero.member);
  const EntireSeries one = EntireSeries::from({1.0});
  const auto r = dbar::hfp_membership_check(one, one);
  CHECK(r.member);
  CHECK(std::abs(r.lhs - std::numbers::pi * oracle().real("eta_0")) <= 1e-14);
  CHECK(std::abs(r.lhs - 1.268) <= 1e-3);
  CHECK(std::abs(r.budget - 3.0 * std::numbers::pi) <= 1e-14);
  const double s = std::sqrt(3.1 * r.weight / r.lhs);
  const auto v = dbar::hfp_membership_check(EntireSeries::from({s}), one);
  CHECK_FALSE(v.member);
  CHECK(std::abs(v.ratio - 3.1) <= 1e-12);
}
