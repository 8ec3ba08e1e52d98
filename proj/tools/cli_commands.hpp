// Subcommands of the `wright` tool. Each cmd_* returns the process exit code
// and writes only to the streams it is given.

#ifndef WRIGHTFN_TOOLS_CLI_COMMANDS_HPP_
#define WRIGHTFN_TOOLS_CLI_COMMANDS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wrightfn/dequad.hpp"
#include "wrightfn/wright.hpp"

namespace wrightfn::cli {

enum ExitCode : int {
  kOk = 0,
  kNotConverged = 1,
  kUsage = 2,
  kDomain = 3,
  kIo = 4,
};

de::QuadratureConfig config_for(std::optional<double> tol);

// Shortest decimal that parses back to x; with digits > 0, x rounded to that
// many significant digits.
std::string format_number(double x, int digits = 0);

struct EvalOptions {
  double a = 0.0;
  double b = 1.0;
  double z = 0.0;
  std::optional<double> tol;
  int digits = 15;
};

int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err);

struct GridRow {
  double z = 0.0;
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  // Set when wright() threw; value is NaN then.
  std::string failure;
};

struct GridOptions {
  double a = 0.0;
  double b = 1.0;
  double zmin = 0.0;
  double zmax = 1.0;
  int n = 2;
  std::optional<double> tol;
  // 0 means shortest round-trip formatting.
  int digits = 0;
  // Empty or "-" writes to the output stream.
  std::string out;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Throws std::invalid_argument unless n >= 2 and zmax > zmin.
void validate(const GridOptions& options);

// Rows in ascending z, evaluated concurrently.
std::vector<GridRow> evaluate_grid(const GridOptions& options);

// Header `z,value,err` then one line per row, LF-terminated.
void write_csv(const std::vector<GridRow>& rows, int digits, std::ostream& out);

int cmd_grid(const GridOptions& options, std::ostream& out, std::ostream& err);

struct GroupReport {
  std::string name;
  int passed = 0;
  int total = 0;
  double worst_residual = 0.0;
  double tolerance = 0.0;

  bool ok() const { return total > 0 && passed == total; }
};

// Identity suite. The tuning is forwarded to every direct wright() call so
// that injected faults show up in the report.
std::vector<GroupReport> run_selftest(const EvalTuning& tuning = {});

int cmd_selftest(std::ostream& out, const EvalTuning& tuning = {});

struct BenchRecord {
  std::string label;
  double x = 0.0;
  // Median wall-clock time of one wright() call.
  double microseconds = 0.0;
  double value = 0.0;
  // Closed form of the identity at x.
  double reference = 0.0;
  bool converged = true;
};

// Throws std::invalid_argument for reps < 1.
std::vector<BenchRecord> run_bench(int reps);

int cmd_bench(int reps, std::ostream& out, std::ostream& err);

}  // namespace wrightfn::cli

#endif  // WRIGHTFN_TOOLS_CLI_COMMANDS_HPP_
