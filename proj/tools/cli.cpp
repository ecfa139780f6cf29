#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ellint/cli.hpp"
#include "ellint/errors.hpp"
#include "ellint/geometry.hpp"
#include "ellint/identities.hpp"
#include "ellint/quadrature.hpp"
#include "ellint/series.hpp"
#include "ellint/version.hpp"

namespace ellint::cli {
namespace {

namespace ids = identities;
using nlohmann::ordered_json;

// Thrown for option combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  bool timestamp = false;
};

ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

void print_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ---- area -------------------------------------------------------------

struct AreaArgs {
  std::vector<double> axes;
  std::string method = "auto";
  double tol = 1e-10;
};

int run_area(const AreaArgs& a, const Globals& g, std::ostream& out) {
  if (a.axes.size() != 3) throw UsageError("area: --axes takes exactly three values a,b,c");
  const geometry::SemiAxes axes{a.axes[0], a.axes[1], a.axes[2]};
  double area = 0.0;
  double error_estimate = NAN;
  if (a.method == "auto") {
    area = geometry::surface_area(axes);
  } else if (a.method == "legendre") {
    area = geometry::surface_area_legendre(geometry::sorted_descending(axes));
  } else if (a.method == "ascending") {
    area = geometry::surface_area_ascending(geometry::sorted_ascending(axes));
  } else {
    detail::require(a.tol > 0.0 && a.tol < 1.0, "area", "0 < tol < 1");
    detail::require(axes.a > 0.0 && axes.b > 0.0 && axes.c > 0.0 && std::isfinite(axes.a) &&
                        std::isfinite(axes.b) && std::isfinite(axes.c),
                    "area", "a, b, c > 0 and finite");
    const quadrature::QuadratureResult r =
        quadrature::surface_area_quadrature(axes.a, axes.b, axes.c, a.tol);
    area = r.value;
    error_estimate = r.error_estimate;
  }
  if (g.json) {
    ordered_json j;
    j["axes"] = {axes.a, axes.b, axes.c};
    j["method"] = a.method;
    j["shape"] = std::string(geometry::to_string(geometry::classify(axes)));
    j["area"] = area;
    if (a.method == "quadrature") j["error_estimate"] = number(error_estimate);
    print_json(out, j);
  } else {
    out << format_human(area) << '\n';
  }
  return exit_ok;
}

// ---- integral ---------------------------------------------------------

struct IntegralArgs {
  std::string id;
  std::string mode = "closed";
  double tol = ids::default_tol;
  double oracle_tol = ids::default_oracle_tol;
  std::map<std::string, double> values;
};

const std::vector<std::string>& param_names() {
  static const std::vector<std::string> names = {"alpha", "alphabar", "k",   "kbar", "z",
                                                 "eps",   "beta",     "nu",  "mu",   "psi",
                                                 "xi",    "e1",       "e2",  "f1bar", "f2bar"};
  return names;
}

ids::IdentityParams make_params(std::size_t index, const std::vector<double>& v) {
  switch (index) {
    case 0: return ids::AlphaK{v[0], v[1]};
    case 1: return ids::AlphaKBar{v[0], v[1]};
    case 2: return ids::AlphaZ{v[0], v[1]};
    case 3: return ids::EpsAB{v[0], v[1], v[2]};
    case 4: return ids::NuK{v[0], v[1]};
    case 5: return ids::MuK{v[0], v[1]};
    case 6: return ids::PsiKBar{v[0], v[1]};
    case 7: return ids::XiKBar{v[0], v[1]};
    case 8: return ids::E1E2{v[0], v[1]};
    default: return ids::FBar{v[0], v[1]};
  }
}

ids::IdentityParams collect_params(ids::IdentityId id, const IntegralArgs& a) {
  const ids::IdentityParams shape = ids::info(id).sample(0.5, 0.5, 0, 0);
  const auto fields = ids::param_fields(shape);
  std::vector<double> values;
  std::string expected;
  for (const auto& [name, unused] : fields) {
    (void)unused;
    expected += " --" + name;
  }
  for (const auto& [name, unused] : fields) {
    (void)unused;
    const auto it = a.values.find(name);
    if (it == a.values.end()) {
      throw UsageError("integral: " + a.id + " requires" + expected + " (missing --" + name + ")");
    }
    values.push_back(it->second);
  }
  for (const auto& [name, unused] : a.values) {
    (void)unused;
    bool known = false;
    for (const auto& f : fields) known = known || f.first == name;
    if (!known) {
      throw UsageError("integral: --" + name + " does not apply to " + a.id + "; expected" +
                       expected);
    }
  }
  return make_params(shape.index(), values);
}

int run_integral(const IntegralArgs& a, const Globals& g, std::ostream& out) {
  const auto id = ids::parse_identity(a.id);
  if (!id) throw UsageError("integral: unknown identity id '" + a.id + "'");
  const ids::IdentityParams p = collect_params(*id, a);
  detail::require(a.tol > 0.0, "integral", "tol > 0");
  detail::require(a.oracle_tol > 0.0 && a.oracle_tol < 1.0, "integral", "0 < oracle-tol < 1");

  ordered_json j;
  j["id"] = a.id;
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : ids::param_fields(p)) params[name] = value;
  j["params"] = params;
  j["mode"] = a.mode;

  if (a.mode == "closed") {
    const double c = ids::closed(*id, p);
    j["closed"] = number(c);
    if (g.json) {
      print_json(out, j);
    } else {
      out << format_human(c) << '\n';
    }
    return exit_ok;
  }
  if (a.mode == "oracle") {
    const quadrature::QuadratureResult r = ids::oracle(*id, p, a.oracle_tol);
    j["oracle"] = number(r.value);
    j["error_estimate"] = number(r.error_estimate);
    j["evaluations"] = r.evaluations;
    if (g.json) {
      print_json(out, j);
    } else {
      out << format_human(r.value) << '\n';
    }
    return exit_ok;
  }
  const ids::VerificationRecord v = ids::verify(*id, p, a.tol, a.oracle_tol);
  if (g.json) {
    j["closed"] = number(v.closed);
    j["oracle"] = number(v.oracle);
    j["abs_err"] = number(v.abs_err);
    j["rel_err"] = number(v.rel_err);
    j["tol"] = a.tol;
    j["pass"] = v.pass;
    print_json(out, j);
  } else {
    out << "closed   " << format_human(v.closed) << '\n'
        << "oracle   " << format_human(v.oracle) << '\n'
        << "abs_err  " << format_human(v.abs_err) << '\n'
        << "rel_err  " << format_human(v.rel_err) << '\n'
        << "pass     " << (v.pass ? "true" : "false") << '\n';
  }
  return v.pass ? exit_ok : exit_verification_failed;
}

// ---- series -----------------------------------------------------------

struct SeriesArgs {
  std::string id;
  double e1 = 0.0;
  double e2 = 0.0;
  double tol = 1e-15;
  std::int64_t max_terms = series::default_max_terms;
};

int run_series(const SeriesArgs& a, const Globals& g, std::ostream& out) {
  const bool first = a.id == "SIGMA1";
  if (!first && a.id != "SIGMA2") {
    throw UsageError("series: unknown series id '" + a.id + "' (expected SIGMA1 or SIGMA2)");
  }
  const series::SeriesSum s = first ? series::sigma1_sum(a.e1, a.e2, a.tol, a.max_terms)
                                    : series::sigma2_sum(a.e1, a.e2, a.tol, a.max_terms);
  const double ref = first ? series::sigma1_reference(a.e1, a.e2)
                           : series::sigma2_reference(a.e1, a.e2);
  const double discrepancy = std::fabs(s.value - ref);
  if (g.json) {
    ordered_json j;
    j["id"] = a.id;
    j["e1"] = a.e1;
    j["e2"] = a.e2;
    j["sum"] = s.value;
    j["terms_used"] = s.terms_used;
    j["truncation_estimate"] = s.truncation_estimate;
    j["reference"] = ref;
    j["discrepancy"] = discrepancy;
    print_json(out, j);
  } else {
    out << "sum          " << format_human(s.value) << '\n'
        << "terms_used   " << s.terms_used << '\n'
        << "reference    " << format_human(ref) << '\n'
        << "discrepancy  " << format_human(discrepancy) << '\n';
  }
  return exit_ok;
}

// ---- verify -----------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int grid = 10;
  double tol = 0.0;
  bool tol_set = false;
  std::string out_path;
  std::string format = "json";
  unsigned threads = 0;
};

void print_summary(const Report& r, std::ostream& out) {
  struct Group {
    std::string id;
    int total = 0;
    int failed = 0;
    double worst = 0.0;
  };
  std::vector<Group> groups;
  for (const ReportRecord& rec : r.records) {
    if (groups.empty() || groups.back().id != rec.id) {
      bool found = false;
      for (Group& gr : groups) {
        if (gr.id == rec.id) {
          std::swap(gr, groups.back());
          found = true;
          break;
        }
      }
      if (!found) groups.push_back({rec.id});
    }
    Group& gr = groups.back();
    ++gr.total;
    if (!rec.pass) ++gr.failed;
    if (!(rec.rel_err <= gr.worst)) gr.worst = rec.rel_err;
  }
  for (const Group& gr : groups) {
    char line[160];
    std::snprintf(line, sizeof line, "%-24s %4s %5d/%-5d max_rel_err %s\n", gr.id.c_str(),
                  gr.failed == 0 ? "ok" : "FAIL", gr.total - gr.failed, gr.total,
                  format_human(gr.worst).c_str());
    out << line;
  }
  for (const ReportRecord& rec : r.records) {
    if (rec.pass) continue;
    out << "failed " << rec.id;
    for (const auto& [name, value] : rec.params) out << ' ' << name << '=' << format_human(value);
    out << " closed=" << format_human(rec.closed) << " oracle=" << format_human(rec.oracle)
        << " rel_err=" << format_human(rec.rel_err) << '\n';
  }
  out << "suite " << r.suite << " grid " << r.grid << ": " << r.passed() << " passed, "
      << r.failed() << " failed\n";
}

int run_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw UsageError("verify: unknown suite '" + a.suite + "'");
  if (a.format != "json" && a.format != "csv") {
    throw UsageError("verify: --format must be json or csv");
  }
  VerifyOptions opts;
  opts.suite = *suite;
  opts.grid = a.grid;
  if (a.tol_set) opts.tol = a.tol;
  opts.threads = a.threads;
  Report report = run_suite(opts);
  if (g.timestamp) report.timestamp = utc_timestamp();

  if (!a.out_path.empty()) {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw UsageError("verify: cannot open '" + a.out_path + "' for writing");
    if (a.format == "csv") {
      file << to_csv(report);
    } else {
      file << to_json(report).dump(2) << '\n';
    }
    if (!file) throw UsageError("verify: failed writing '" + a.out_path + "'");
  }
  if (g.json) {
    print_json(out, to_json(report));
  } else {
    print_summary(report, out);
  }
  if (report.non_converged) return exit_non_convergence;
  return report.failed() == 0 ? exit_ok : exit_verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ellipsoid surface areas, elliptic-integral identities and their numerical checks",
               "ellint"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print machine-readable JSON instead of human output");
  app.add_flag("--timestamp", g.timestamp, "Record the UTC time in verify reports");
  app.set_version_flag("--version", std::string(ellint::version));

  AreaArgs area;
  CLI::App* area_cmd = app.add_subcommand("area", "Surface area of an ellipsoid");
  area_cmd->add_option("--axes", area.axes, "Semi-axes a,b,c")->delimiter(',')->required();
  area_cmd->add_option("--method", area.method, "auto, legendre, ascending or quadrature")
      ->check(CLI::IsMember({"auto", "legendre", "ascending", "quadrature"}));
  area_cmd->add_option("--tol", area.tol, "Relative tolerance for the quadrature method");

  IntegralArgs integral;
  CLI::App* integral_cmd = app.add_subcommand("integral", "Evaluate an identity by id");
  integral_cmd->add_option("--id", integral.id, "Identity id, e.g. I1, PSEUDO, ATAN_E")
      ->required();
  integral_cmd->add_option("--mode", integral.mode, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  integral_cmd->add_option("--tol", integral.tol, "Pass tolerance for --mode both");
  integral_cmd->add_option("--oracle-tol", integral.oracle_tol, "Quadrature tolerance");
  std::map<std::string, double> raw;
  for (const std::string& name : param_names()) {
    std::string flag = "--" + name;
    if (name == "f1bar") flag = "--f1bar,--f1";
    if (name == "f2bar") flag = "--f2bar,--f2";
    integral_cmd->add_option(flag, raw[name], "Parameter " + name);
  }

  SeriesArgs ser;
  CLI::App* series_cmd = app.add_subcommand("series", "Sum the SIGMA1 or SIGMA2 series");
  series_cmd->add_option("--id", ser.id, "SIGMA1 or SIGMA2")->required();
  series_cmd->add_option("--e1", ser.e1, "Larger eccentricity")->required();
  series_cmd->add_option("--e2", ser.e2, "Smaller eccentricity")->required();
  series_cmd->add_option("--tol", ser.tol, "Relative stopping tolerance");
  series_cmd->add_option("--max-terms", ser.max_terms, "Term cap");

  VerifyArgs ver;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("--suite", ver.suite,
                         "all, core, geometry, integrals, series or extensions");
  verify_cmd->add_option("--grid", ver.grid, "Grid points per axis (>= 2)");
  CLI::Option* tol_opt =
      verify_cmd->add_option("--tol", ver.tol, "Tolerance for every oracle comparison");
  verify_cmd->add_option("--out", ver.out_path, "Write the report to this file");
  verify_cmd->add_option("--format", ver.format, "Report file format: json or csv");
  verify_cmd->add_option("--threads", ver.threads, "Worker threads (0: all cores)");

  for (CLI::App* sub : {area_cmd, integral_cmd, series_cmd, verify_cmd}) sub->fallthrough();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("ellint");
  for (const std::string& s : args) argv_store.push_back(s);
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (area_cmd->parsed()) return run_area(area, g, out);
    if (integral_cmd->parsed()) {
      for (const std::string& name : param_names()) {
        if (integral_cmd->count("--" + name) > 0) integral.values[name] = raw[name];
      }
      return run_integral(integral, g, out);
    }
    if (series_cmd->parsed()) return run_series(ser, g, out);
    ver.tol_set = tol_opt->count() > 0;
    return run_verify(ver, g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << " (best estimate " << format_human(e.best())
        << ", error estimate " << format_human(e.error_estimate()) << ")\n";
    return exit_non_convergence;
  }
}

}  // namespace ellint::cli
