#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfs/app/verify.hpp"
#include "hfs/moments.hpp"

namespace hfs::report {

using json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

/// {"schema": 1, "kind": kind}; callers append their payload.
json envelope(const std::string& kind);

/// [re, im].
json complex_json(std::complex<double> z);

/// Non-finite doubles become the strings "inf", "-inf", "nan" so the output stays valid JSON.
json number(double v);

json moments_json(const moments::MomentTable& t);

/// Columns n,eta,log_eta,abs_err,route; 17 significant digits.
std::string moments_csv(const moments::MomentTable& t);

json check_json(const verify::Check& c);
json suite_json(const verify::SuiteResult& s);
json verify_json(const std::vector<verify::SuiteResult>& suites);

/// Round-trip formatting shared by the CSV writers.
std::string format_double(double v);

/// Two-space indented JSON followed by a newline.
std::string dump(const json& j);

}  // namespace hfs::report
