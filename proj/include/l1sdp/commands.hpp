#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "l1sdp/conic.hpp"
#include "l1sdp/linalg.hpp"
#include "l1sdp/relax.hpp"

namespace l1sdp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitIterLimit = 2,
  kExitCheckFailed = 3,
};

enum class Format { Text, Json, Csv };

/// Parses "text" / "json" / "csv"; throws InputError otherwise.
Format parse_format(const std::string& text);

struct BoundEntry {
  std::string name;
  double value = 0.0;
  std::string status;
  double residual_primal = 0.0;
  double residual_dual = 0.0;
  double residual_gap = 0.0;
  long iterations = 0;
  double seconds = 0.0;
};

struct LowerBound {
  std::string problem;  ///< "qpl1", "qpl2l1" or "qplp"
  double value = 0.0;
  std::vector<double> witness;
  std::string method;
};

struct OrderingCheck {
  std::string relation;  ///< "lhs >= rhs" or "lhs == rhs"
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  /// False for relations that are only observed (no theorem backs them).
  bool asserted = true;
};

struct BoundReport {
  std::string instance;
  int n = 0;
  std::optional<double> k;
  std::optional<double> p;
  double lambda_max = 0.0;
  double check_tol = 0.0;
  std::vector<BoundEntry> bounds;
  std::vector<LowerBound> lower_bounds;
  std::vector<OrderingCheck> orderings;
  std::optional<relax::NewEqCertificate> new_eq_certificate;

  const BoundEntry* find(const std::string& name) const;
  bool all_optimal() const;
  bool all_asserted_hold() const;
};

struct CompareOptions {
  std::optional<double> k;
  std::optional<double> p;
  conic::SolverSettings settings;
  std::uint64_t seed = 0;
  int restarts = 50;
};

/// Computes every bound applicable to (k, p) and the ordering checks between
/// them. Throws InputError for invalid k/p.
BoundReport compare_bounds(const SymMat& q, const std::string& instance,
                           const CompareOptions& opts);

void write_report(std::ostream& out, const BoundReport& report, Format format);

struct BoundCommand {
  std::string matrix_path;
  std::string relaxation;
  std::optional<double> k;
  std::optional<double> p;
  conic::SolverSettings settings;
  Format format = Format::Text;
};
int cmd_bound(const BoundCommand& cmd, std::ostream& out, std::ostream& err);

struct CompareCommand {
  std::string matrix_path;
  CompareOptions options;
  Format format = Format::Text;
};
int cmd_compare(const CompareCommand& cmd, std::ostream& out, std::ostream& err);

struct ExampleRow {
  std::string label;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// Recomputes the reference example values on the embedded 6x6 instance.
std::vector<ExampleRow> run_examples(double tol, const conic::SolverSettings& settings);

struct ExamplesCommand {
  double tol = 1e-2;
  conic::SolverSettings settings;
  Format format = Format::Text;
};
int cmd_examples(const ExamplesCommand& cmd, std::ostream& out, std::ostream& err);

/// "START:STEP:END", inclusive of END up to rounding. Throws InputError.
std::vector<double> parse_grid(const std::string& spec);

struct SweepRow {
  double p = 0.0;
  double lower = 0.0;
  double dnn_lp = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  bool sandwich = false;
  bool optimal = false;
};

/// One row per grid point. b1 reuses a single DnnL1 solve.
std::vector<SweepRow> sweep_p(const SymMat& q, const std::vector<double>& grid,
                              const conic::SolverSettings& settings);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct SweepCommand {
  int n = 10;
  std::uint64_t seed = 0;
  std::string grid = "1.05:0.05:1.95";
  std::string out_path;
  conic::SolverSettings settings;
};

/// Draws Q with entries uniform in [0, 1), symmetrized as (Q + Q^T)/2.
SymMat sweep_instance(int n, std::uint64_t seed);
int cmd_sweep_p(const SweepCommand& cmd, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace l1sdp::cli
