#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hfs::verify {

/// One pass/fail check: measured compared against limit with relation.
struct Check {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double limit = 0.0;
  std::string relation = "<=";
  std::string details;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;  // sorted by name

  bool pass() const;
};

struct Options {
  double tol = 1e-12;
  int nmax = -1;    // suite default when negative
  int points = -1;  // suite default when negative
  std::uint64_t seed = 1;
  std::string golden_path;  // bundled file when empty
};

/// Suite names in sorted order.
const std::vector<std::string>& suite_names();

/// Runs one suite; ConfigError for an unknown name.
SuiteResult run_suite(const std::string& name, const Options& options);

/// "all" runs every suite; any other name runs that suite alone.
std::vector<SuiteResult> run(const std::string& name, const Options& options);

}  // namespace hfs::verify
