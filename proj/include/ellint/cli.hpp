#ifndef ELLINT_CLI_HPP
#define ELLINT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ellint::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
  exit_non_convergence = 3,
};

using Fields = std::vector<std::pair<std::string, double>>;

// One comparison of a closed form (or left-hand side) against an oracle (or
// right-hand side).
struct ReportRecord {
  std::string id;
  Fields params;
  double closed;
  double oracle;
  double abs_err;
  double rel_err;
  bool pass;
};

struct Report {
  std::string suite;
  int grid = 0;
  Fields tolerances;
  std::vector<ReportRecord> records;
  std::optional<std::string> timestamp;
  // Set when an oracle failed to converge for at least one record.
  bool non_converged = false;

  int passed() const;
  int failed() const;
};

// Human output: printf %.15g.
std::string format_human(double x);
// Machine output: shortest representation that round-trips.
std::string format_shortest(double x);

nlohmann::ordered_json to_json(const Report& r);
// RFC 4180 CSV with header id,params,closed,oracle,abs_err,rel_err,pass;
// params are written as name=value pairs joined by ';'.
std::string to_csv(const Report& r);

enum class Suite { all, core, geometry, integrals, series, extensions };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct VerifyOptions {
  Suite suite = Suite::all;
  int grid = 10;
  // Overrides the tolerance of every oracle comparison when set; algebraic
  // relations keep their own tolerances.
  std::optional<double> tol;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Runs the checks of a suite. Records are ordered by check, then grid index,
// regardless of thread scheduling. Throws DomainError if grid < 2.
Report run_suite(const VerifyOptions& opts);

// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellint::cli

#endif  // ELLINT_CLI_HPP
