#include "hfs/app/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hfs::report {

json envelope(const std::string& kind) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json complex_json(std::complex<double> z) { return json::array({number(z.real()), number(z.imag())}); }

json moments_json(const moments::MomentTable& t) {
  json j = envelope("moments");
  j["n_max"] = t.n_max;
  json rows = json::array();
  for (int n = 0; n <= t.n_max; ++n) {
    json r;
    r["n"] = n;
    r["eta"] = number(t.eta[n]);
    r["log_eta"] = number(t.log_eta[n]);
    r["abs_err"] = number(t.abs_err[n]);
    r["route"] = std::string(moments::to_string(t.route[n]));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string moments_csv(const moments::MomentTable& t) {
  std::ostringstream out;
  out << "n,eta,log_eta,abs_err,route\n";
  for (int n = 0; n <= t.n_max; ++n) {
    out << n << ',' << format_double(t.eta[n]) << ',' << format_double(t.log_eta[n]) << ','
        << format_double(t.abs_err[n]) << ',' << moments::to_string(t.route[n]) << '\n';
  }
  return out.str();
}

json check_json(const verify::Check& c) {
  json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["measured"] = number(c.measured);
  j["relation"] = c.relation;
  j["limit"] = number(c.limit);
  if (!c.details.empty()) j["details"] = c.details;
  return j;
}

json suite_json(const verify::SuiteResult& s) {
  json j;
  j["suite"] = s.suite;
  j["pass"] = s.pass();
  json checks = json::array();
  for (const auto& c : s.checks) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  return j;
}

json verify_json(const std::vector<verify::SuiteResult>& suites) {
  json j = envelope("verify");
  bool pass = true;
  json arr = json::array();
  json failed = json::array();
  for (const auto& s : suites) {
    pass = pass && s.pass();
    arr.push_back(suite_json(s));
    for (const auto& c : s.checks) {
      if (!c.pass) failed.push_back(s.suite + "/" + c.name);
    }
  }
  j["pass"] = pass;
  j["failed"] = std::move(failed);
  j["suites"] = std::move(arr);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hfs::report
