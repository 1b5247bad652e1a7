#include "support.hpp"

#include <cstdio>
#include <fstream>

#include "hfs/app/golden.hpp"
#include "hfs/error.hpp"
#include "hfs/expint.hpp"
#include "hfs/moments.hpp"

using namespace hfs;
using hfs::test::oracle;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "golden_test_" + name + ".json";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("bundled file loads and carries 30-digit values") {
  const auto& g = oracle();
  CHECK(g.size() >= 80);
  for (const auto& [name, e] : g.entries()) {
    CAPTURE(name);
    CHECK_FALSE(e.oracle.empty());
    std::size_t digits = 0;
    for (char ch : e.real_text) digits += (ch >= '0' && ch <= '9') ? 1 : 0;
    CHECK(digits >= 30);
  }
  CHECK(g.at("e1_complex_2_plus_3i").is_complex());
  CHECK_FALSE(g.at("eta_0").is_complex());
}

TEST_CASE("pinned values") {
  CHECK(std::abs(oracle().real("eta_0") - 0.403652637676806) <= 1e-15);
  CHECK(std::abs(oracle().real("eta_1") - 0.192694724646389) <= 1e-15);
  CHECK(std::abs(oracle().real("e1_1") - 0.219383934395520) <= 1e-15);
  CHECK(std::abs(moments::eta_closed_form(0) - oracle().real("eta_0")) <= 1e-12);
  CHECK(std::abs(moments::eta_closed_form(1) - oracle().real("eta_1")) <= 1e-12);
  CHECK(std::abs(expint::e1(1.0) - oracle().real("e1_1")) <= 1e-12);
  CHECK(oracle().real("euler_gamma") == expint::kEulerGamma);
}

TEST_CASE("loader errors") {
  CHECK_THROWS_AS(golden::GoldenFile::load("no/such/file.json"), ConfigError);
  CHECK_THROWS_AS(golden::GoldenFile::load(write_temp("malformed", "{ not json")), ValidationError);
  CHECK_THROWS_AS(golden::GoldenFile::load(write_temp("array", "[1, 2]")), ValidationError);
  CHECK_THROWS_AS(golden::GoldenFile::load(write_temp("novalue", R"({"a": {"oracle": "x"}})")), ValidationError);
  CHECK_THROWS_AS(golden::GoldenFile::load(write_temp("trailing", R"({"b": {"value": "2x", "oracle": "x"}})")), ValidationError);
  const auto g = golden::GoldenFile::load(write_temp("ok", R"({"a": {"value": "1.5", "oracle": "x"}})"));
  CHECK(g.real("a") == 1.5);
  CHECK_THROWS_AS(g.at("missing"), ValidationError);
  for (const char* n : {"malformed", "array", "novalue", "trailing", "ok"}) std::remove(("golden_test_" + std::string(n) + ".json").c_str());
}
