#include "hfs/app/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include "hfs/app/golden.hpp"
#include "hfs/app/report.hpp"
#include "hfs/app/verify.hpp"
#include "hfs/bargmann.hpp"
#include "hfs/dbar.hpp"
#include "hfs/error.hpp"
#include "hfs/expint.hpp"
#include "hfs/hfock.hpp"
#include "hfs/lerch.hpp"
#include "hfs/moments.hpp"
#include "hfs/random.hpp"

namespace hfs::cli {

namespace {

using complex = std::complex<double>;
using report::json;
using Pair = std::pair<double, double>;

struct Common {
  double tol = 1e-12;
  int nmax = -1;
  int points = -1;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  std::string golden;
};

struct Output {
  Output(json d, std::string c = {}) : doc(std::move(d)), csv(std::move(c)) {}

  json doc;
  std::string csv;  // preferred CSV rendering; flattened doc when empty
  int code = kExitOk;
};

complex as_complex(const Pair& p) { return {p.first, p.second}; }

std::string to_string(expint::Method m) {
  switch (m) {
    case expint::Method::series: return "series";
    case expint::Method::continued_fraction: return "continued_fraction";
    case expint::Method::recurrence: return "recurrence";
    case expint::Method::closed_form: return "closed_form";
  }
  return "unknown";
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& csv) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, csv);
  } else if (j.is_array() && !(j.size() == 2 && j[0].is_number() && j[1].is_number())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), csv);
  } else if (j.is_number_float()) {
    csv << prefix << ',' << report::format_double(j.get<double>()) << '\n';
  } else if (j.is_array()) {
    csv << prefix << ',' << report::format_double(j[0].get<double>()) << ' '
        << report::format_double(j[1].get<double>()) << '\n';
  } else if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      s = q + "\"";
    }
    csv << prefix << ',' << s << '\n';
  } else {
    csv << prefix << ',' << j.dump() << '\n';
  }
}

std::string render(const Output& o, const std::string& format) {
  if (format == "json") return report::dump(o.doc);
  if (!o.csv.empty()) return o.csv;
  std::ostringstream csv;
  csv << "key,value\n";
  flatten(o.doc, "", csv);
  return csv.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

complex json_complex(const json& v, const char* what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ValidationError(std::string(what) + ": expected a number or [re, im]");
}

std::vector<complex> json_complex_list(const json& v, const char* what) {
  if (!v.is_array()) throw ValidationError(std::string(what) + ": expected an array");
  std::vector<complex> out;
  for (const auto& e : v) out.push_back(json_complex(e, what));
  return out;
}

json gram_doc(const hfock::GramMatrix& g, const std::string& kernel) {
  json j = report::envelope("gram");
  j["kernel"] = kernel;
  j["size"] = g.points.size();
  j["min_eig"] = report::number(g.min_eig);
  j["trace"] = report::number(g.trace);
  j["psd"] = g.psd();
  return j;
}

std::string gram_csv(const hfock::GramMatrix& g) {
  std::ostringstream csv;
  csv << "i,j,re,im\n";
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
    for (Eigen::Index k = 0; k < g.entries.cols(); ++k) {
      csv << i << ',' << k << ',' << report::format_double(g.entries(i, k).real()) << ','
          << report::format_double(g.entries(i, k).imag()) << '\n';
    }
  }
  return csv.str();
}

json cm_doc(const lerch::CmReport& r) {
  json j = report::envelope("cm");
  j["n"] = r.n;
  j["max_order"] = r.max_order;
  j["pass"] = r.pass;
  json orders = json::array();
  for (std::size_t k = 0; k < r.violations.size(); ++k) {
    orders.push_back({{"order", k}, {"violations", r.violations[k]}, {"min_signed", report::number(r.min_value[k])}});
  }
  j["orders"] = std::move(orders);
  return j;
}

json audit_doc(const lerch::MlAudit& a) {
  json j = report::envelope("ml-audit");
  j["kernel"] = a.kernel;
  j["value_at_0"] = report::number(a.value_at_0);
  j["derivative_at_0"] = report::number(a.derivative_at_0);
  json conds = json::array();
  for (const auto& c : a.conditions) {
    conds.push_back({{"condition", c.name}, {"status", lerch::to_string(c.status)}, {"details", c.details}});
  }
  j["conditions"] = std::move(conds);
  return j;
}

void write_output(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out.empty() || c.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + c.out + "'");
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for the Hormander-Fock space: moments, kernels, special functions and checks", "hfs"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--tol", c.tol, "Target tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--nmax", c.nmax, "Largest index (command default when omitted)")->check(CLI::NonNegativeNumber);
  app.add_option("--points", c.points, "Random point count (verify gfs)")->check(CLI::PositiveNumber);
  app.add_option("--format", c.format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", c.out, "Output path (stdout when omitted)");
  app.add_option("--seed", c.seed, "Seed for the mt19937_64 point generator")->capture_default_str();
  app.add_option("--golden", c.golden, "Golden values file")->default_str(golden::default_path());

  std::function<Output()> action;

  // moments
  auto* moments_cmd = app.add_subcommand("moments", "Table of eta_n with routes and error estimates")->fallthrough();
  std::string route = "auto";
  moments_cmd->add_option("--route", route, "auto (quadrature-checked) or closed")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "closed"}));
  moments_cmd->callback([&] {
    action = [&] {
      const int n = c.nmax < 0 ? 30 : c.nmax;
      const auto t = route == "closed" ? moments::closed_form_table(n) : moments::eta_table(n, c.tol);
      return Output{report::moments_json(t), report::moments_csv(t)};
    };
  });

  // expint
  auto* expint_cmd = app.add_subcommand("expint", "Exponential integral E_n(x), or E1(z) with --z")->fallthrough();
  int en_order = 1;
  double en_x = 1.0;
  std::optional<Pair> en_z;
  expint_cmd->add_option("-n,--order", en_order, "Order n >= 0")->capture_default_str();
  expint_cmd->add_option("-x", en_x, "Real argument")->capture_default_str();
  expint_cmd->add_option("--z", en_z, "Complex argument RE IM (E1 only)");
  expint_cmd->callback([&] {
    action = [&] {
      json j = report::envelope("expint");
      if (en_z) {
        if (en_order != 1) throw ConfigError("expint: --z is available for n = 1 only");
        const complex z = as_complex(*en_z);
        j["n"] = 1;
        j["z"] = report::complex_json(z);
        j["value"] = report::complex_json(expint::e1(z));
      } else {
        const auto v = expint::en_eval(en_order, en_x);
        j["n"] = v.order;
        j["x"] = report::number(v.argument);
        j["value"] = report::number(v.value);
        j["method"] = to_string(v.method);
      }
      return Output{j};
    };
  });

  // efun
  auto* efun_cmd = app.add_subcommand("efun", "The entire function E(z) = sum z^n / eta_n")->fallthrough();
  Pair ez{0.0, 0.0};
  efun_cmd->add_option("--z", ez, "Argument RE IM")->required();
  efun_cmd->callback([&] {
    action = [&] {
      const complex z = as_complex(ez);
      json j = report::envelope("efun");
      j["z"] = report::complex_json(z);
      j["value"] = report::complex_json(hfock::eval_E(z, c.tol));
      j["terms"] = hfock::truncation_index(std::abs(z), c.tol) + 1;
      return Output{j};
    };
  });

  // kernel
  auto* kernel_cmd = app.add_subcommand("kernel", "Reproducing kernel K(z, w) = E(z conj w)")->fallthrough();
  Pair kz{0.0, 0.0}, kw{0.0, 0.0};
  bool normalized = false;
  kernel_cmd->add_option("--z", kz, "First point RE IM")->required();
  kernel_cmd->add_option("--w", kw, "Second point RE IM")->required();
  kernel_cmd->add_flag("--normalized", normalized, "Scale by eta_0 so the kernel is 1 at the origin");
  kernel_cmd->callback([&] {
    action = [&] {
      const complex z = as_complex(kz), w = as_complex(kw);
      json j = report::envelope("kernel");
      j["z"] = report::complex_json(z);
      j["w"] = report::complex_json(w);
      j["normalized"] = normalized;
      j["value"] = report::complex_json(hfock::kernel_K(z, w, c.tol, normalized));
      return Output{j};
    };
  });

  // gram
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a kernel on a point set")->fallthrough();
  std::string gram_input;
  std::string gram_kernel = "K";
  int gram_n = 1;
  int gram_random = 0;
  double gram_radius = 2.0;
  gram_cmd->add_option("--input", gram_input, "JSON {kernel, n, points: [[re, im], ...]}");
  gram_cmd->add_option("--kernel", gram_kernel, "K, phi or F")->capture_default_str()->check(CLI::IsMember({"K", "phi", "F"}));
  gram_cmd->add_option("-n,--order", gram_n, "Order for phi and F")->capture_default_str();
  gram_cmd->add_option("--random", gram_random, "Use this many seeded random points instead of --input");
  gram_cmd->add_option("--radius", gram_radius, "Disk radius for --random")->capture_default_str();
  gram_cmd->callback([&] {
    action = [&] {
      std::vector<complex> pts;
      std::string kernel = gram_kernel;
      int n = gram_n;
      if (!gram_input.empty()) {
        const json in = read_json_file(gram_input);
        if (!in.is_object() || !in.contains("points")) throw ValidationError("gram: input needs a 'points' array");
        pts = json_complex_list(in["points"], "gram points");
        if (in.contains("kernel")) kernel = in["kernel"].get<std::string>();
        if (in.contains("n")) n = in["n"].get<int>();
      } else if (gram_random > 0) {
        Rng rng(c.seed);
        pts = rng.disk_points(static_cast<std::size_t>(gram_random), gram_radius);
      } else {
        throw ConfigError("gram: give --input or --random");
      }
      hfock::GramMatrix g;
      if (kernel == "K") {
        g = hfock::gram_K(pts, c.tol);
      } else if (kernel == "phi") {
        g = lerch::gram_phi(n, pts);
      } else if (kernel == "F") {
        g = hfock::make_gram(
            pts, [n](complex z, complex w) { return dbar::fock_poly_kernel(n, z, w); },
            [n](complex z) { return dbar::fock_poly_kernel(n, z, z).real(); });
      } else {
        throw ConfigError("gram: unknown kernel '" + kernel + "'");
      }
      json j = gram_doc(g, kernel == "K" ? "K" : kernel + "_" + std::to_string(n));
      return Output{j, gram_csv(g)};
    };
  });

  // bargmann
  auto* bargmann_cmd = app.add_subcommand("bargmann", "Hermite expansion A_z(x) on a grid")->fallthrough();
  Pair bz{0.0, 0.0};
  double xmin = -5.0, xmax = 5.0;
  int count = 101, trunc = 60;
  bargmann_cmd->add_option("--z", bz, "RE IM")->required();
  bargmann_cmd->add_option("--xmin", xmin)->capture_default_str();
  bargmann_cmd->add_option("--xmax", xmax)->capture_default_str();
  bargmann_cmd->add_option("--count", count)->capture_default_str()->check(CLI::Range(2, 100000));
  bargmann_cmd->add_option("--trunc", trunc, "Series truncation")->capture_default_str();
  bargmann_cmd->callback([&] {
    action = [&] {
      const complex z = as_complex(bz);
      if (!(xmax > xmin)) throw ConfigError("bargmann: need xmax > xmin");
      json j = report::envelope("bargmann");
      j["z"] = report::complex_json(z);
      j["trunc"] = trunc;
      if (std::abs(z) <= 2.0 && trunc >= 40) {
        j["l2_norm_sq"] = report::number(bargmann::l2_norm_A_sq(z, 200, trunc));
        j["E_abs_z_sq"] = report::number(hfock::eval_E(std::norm(z), c.tol).real());
      }
      std::ostringstream csv;
      csv << "x,re,im\n";
      json grid = json::array();
      for (int i = 0; i < count; ++i) {
        const double x = xmin + (xmax - xmin) * i / (count - 1);
        const complex a = bargmann::bargmann_A_truncated(z, x, trunc);
        csv << report::format_double(x) << ',' << report::format_double(a.real()) << ','
            << report::format_double(a.imag()) << '\n';
        grid.push_back({report::number(x), report::complex_json(a)});
      }
      j["grid"] = std::move(grid);
      return Output{j, csv.str()};
    };
  });

  // lerch
  auto* lerch_cmd = app.add_subcommand("lerch", "Disk kernels, Lerch and Hurwitz functions, CM and ML checks")->fallthrough();
  lerch_cmd->require_subcommand(1);
  int ln = 1;
  Pair lz{0.0, 0.0};
  double ls = 2.0, la = 1.0;
  bool tilde = false, integral = false;
  auto* phi_cmd = lerch_cmd->add_subcommand("phi", "phi_n(z) = sum z^k / (k + n)")->fallthrough();
  phi_cmd->add_option("-n,--order", ln)->capture_default_str();
  phi_cmd->add_option("--z", lz, "RE IM")->required();
  phi_cmd->add_flag("--tilde", tilde, "n phi_n(z)");
  phi_cmd->callback([&] {
    action = [&] {
      const complex z = as_complex(lz);
      json j = report::envelope(tilde ? "phi_tilde" : "phi");
      j["n"] = ln;
      j["z"] = report::complex_json(z);
      j["value"] = report::complex_json(tilde ? lerch::phi_tilde(ln, z, c.tol) : lerch::phi(ln, z, c.tol));
      return Output{j};
    };
  });
  auto* hurwitz_cmd = lerch_cmd->add_subcommand("hurwitz", "Hurwitz zeta(s, a)")->fallthrough();
  hurwitz_cmd->add_option("--s", ls)->capture_default_str();
  hurwitz_cmd->add_option("--a", la)->capture_default_str();
  hurwitz_cmd->add_flag("--integral", integral, "Use the integral representation");
  hurwitz_cmd->callback([&] {
    action = [&] {
      json j = report::envelope("hurwitz");
      j["s"] = ls;
      j["a"] = la;
      j["route"] = integral ? "integral" : "series";
      j["value"] = report::number(integral ? lerch::hurwitz_zeta_integral(ls, la, c.tol) : lerch::hurwitz_zeta(ls, la, c.tol));
      return Output{j};
    };
  });
  auto* lphi_cmd = lerch_cmd->add_subcommand("lerch-phi", "Lerch transcendent Phi(z, s, a)")->fallthrough();
  lphi_cmd->add_option("--z", lz, "RE IM")->required();
  lphi_cmd->add_option("--s", ls)->capture_default_str();
  lphi_cmd->add_option("--a", la)->capture_default_str();
  lphi_cmd->add_flag("--integral", integral, "Use the integral representation (s >= 1)");
  lphi_cmd->callback([&] {
    action = [&] {
      const complex z = as_complex(lz);
      json j = report::envelope("lerch-phi");
      j["z"] = report::complex_json(z);
      j["s"] = ls;
      j["a"] = la;
      j["route"] = integral ? "integral" : "series";
      j["value"] = report::complex_json(integral ? lerch::lerch_phi_integral(z, ls, la, c.tol) : lerch::lerch_phi(z, ls, la, c.tol));
      return Output{j};
    };
  });
  int order = 6, grid_count = 50;
  double grid_lo = 0.1, grid_h = 0.1;
  auto* cm_cmd = lerch_cmd->add_subcommand("cm", "Finite-difference complete monotonicity of a -> phi_n(-a)")->fallthrough();
  cm_cmd->add_option("-n,--order", ln)->capture_default_str();
  cm_cmd->add_option("--max-order", order)->capture_default_str();
  cm_cmd->add_option("--lo", grid_lo)->capture_default_str();
  cm_cmd->add_option("--step", grid_h)->capture_default_str();
  cm_cmd->add_option("--count", grid_count)->capture_default_str();
  cm_cmd->callback([&] {
    action = [&] { return Output{cm_doc(lerch::cm_evidence(ln, lerch::uniform_grid(grid_lo, grid_h, grid_count), order))}; };
  });
  std::string ml_kernel = "phi_tilde";
  auto* ml_cmd = lerch_cmd->add_subcommand("ml-audit", "ML-class condition audit")->fallthrough();
  ml_cmd->add_option("--kernel", ml_kernel)->capture_default_str()->check(CLI::IsMember({"phi_tilde", "eta0_K"}));
  ml_cmd->add_option("-n,--order", ln)->capture_default_str();
  ml_cmd->callback([&] {
    action = [&] {
      const auto k = ml_kernel == "eta0_K" ? lerch::MlKernel::eta0_K : lerch::MlKernel::phi_tilde;
      return Output{audit_doc(lerch::ml_condition_audit(k, ln, c.seed))};
    };
  });

  // dbar
  auto* dbar_cmd = app.add_subcommand("dbar", "Residual check for u = conj(z) f + u0 solving dbar u = f")->fallthrough();
  std::string problem;
  std::optional<Pair> fw;
  int fw_degree = 20;
  dbar_cmd->add_option("--problem", problem, "JSON {f: [...], u0: [...], samples?: [...], h?: 1e-5, tol?: 1e-6}");
  dbar_cmd->add_option("--fw", fw, "Use f = F_w(z) = exp(z conj w), w = RE IM");
  dbar_cmd->add_option("--degree", fw_degree, "Truncation degree for --fw")->capture_default_str();
  dbar_cmd->callback([&] {
    action = [&] {
      hfock::EntireSeries f, u0 = hfock::EntireSeries::from({0.0});
      std::vector<complex> samples;
      double h = 1e-5, tol = 1e-6;
      if (!problem.empty()) {
        const json in = read_json_file(problem);
        if (!in.is_object() || !in.contains("f")) throw ValidationError("dbar: problem needs coefficients 'f'");
        f = hfock::EntireSeries::from(json_complex_list(in["f"], "dbar f"), "f");
        if (in.contains("u0")) u0 = hfock::EntireSeries::from(json_complex_list(in["u0"], "dbar u0"), "u0");
        if (in.contains("samples")) samples = json_complex_list(in["samples"], "dbar samples");
        if (in.contains("h")) h = in["h"].get<double>();
        if (in.contains("tol")) tol = in["tol"].get<double>();
      } else if (fw) {
        f = dbar::fw_series(as_complex(*fw), fw_degree);
      } else {
        throw ConfigError("dbar: give --problem or --fw");
      }
      if (samples.empty()) {
        Rng rng(c.seed);
        samples = rng.disk_points(10, 2.0);
      }
      const auto u = dbar::assemble_solution(f, u0);
      const auto rep = dbar::dbar_residual(u, f, samples, h, tol);
      const auto hfp = dbar::hfp_membership_check(u0, f);
      json j = report::envelope("dbar");
      j["samples"] = samples.size();
      j["h"] = h;
      j["tolerance"] = tol;
      j["numeric_max"] = report::number(rep.numeric_max);
      j["symbolic_max"] = report::number(rep.symbolic_max);
      j["pass"] = rep.pass;
      j["hfp"] = {{"lhs", report::number(hfp.lhs)},       {"weight_M", report::number(hfp.weight)},
                  {"budget", report::number(hfp.budget)}, {"ratio", report::number(hfp.ratio)},
                  {"member", hfp.member}};
      if (fw) j["fw_weight_tail"] = report::number(dbar::fw_weight_tail(as_complex(*fw), fw_degree));
      return Output{j};
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites; exit 3 on failure")->fallthrough();
  std::string suite = "all";
  std::vector<std::string> allowed = verify::suite_names();
  allowed.push_back("all");
  verify_cmd->add_option("suite", suite, "Suite name or all")->capture_default_str()->check(CLI::IsMember(allowed));
  verify_cmd->callback([&] {
    action = [&] {
      verify::Options o;
      o.tol = c.tol;
      o.nmax = c.nmax;
      o.points = c.points;
      o.seed = c.seed;
      o.golden_path = c.golden;
      const auto results = verify::run(suite, o);
      Output res{report::verify_json(results)};
      std::ostringstream csv;
      csv << "suite,check,pass,measured,relation,limit\n";
      for (const auto& s : results) {
        for (const auto& ch : s.checks) {
          csv << s.suite << ',' << ch.name << ',' << (ch.pass ? "true" : "false") << ','
              << report::format_double(ch.measured) << ',' << ch.relation << ',' << report::format_double(ch.limit) << '\n';
        }
      }
      res.csv = csv.str();
      res.code = res.doc["pass"].get<bool>() ? kExitOk : kExitVerifyFailed;
      return res;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (!action) throw ConfigError("no command given");
    const Output o = action();
    const std::string text = render(o, c.format);
    write_output(text, c, out);
    if (o.code == kExitVerifyFailed && (!c.out.empty() || c.format != "json")) {
      // The failure report always reaches the caller as JSON.
      err << report::dump(o.doc);
    }
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace hfs::cli
