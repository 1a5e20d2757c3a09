#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace l1sdp::conic {

enum class ConeKind { Free, Nonneg, Zero, Psd };

std::string to_string(ConeKind kind);

/// Contiguous run of variables constrained to one cone. PSD blocks hold a
/// matrix of order `psd_order` in svec form (length m(m+1)/2).
struct ConeBlock {
  ConeKind kind = ConeKind::Free;
  std::size_t offset = 0;
  std::size_t length = 0;
  int psd_order = 0;
};

struct Term {
  std::size_t index = 0;
  double coeff = 0.0;
};

/// One equality row: sum of coeff * x[index] == rhs.
struct EqRow {
  std::vector<Term> terms;
  double rhs = 0.0;
};

/// maximize c^T x  subject to  rows,  x in K_1 x ... x K_b.
///
/// Blocks are appended in order and always partition [0, num_vars()).
class ConeProgram {
 public:
  /// Appends a block and returns its offset.
  std::size_t add_block(ConeKind kind, std::size_t length);
  std::size_t add_psd_block(int order);
  void add_row(std::vector<Term> terms, double rhs);
  void set_objective(std::size_t index, double coeff);

  std::size_t num_vars() const { return objective_.size(); }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<EqRow>& rows() const { return rows_; }
  const std::vector<ConeBlock>& blocks() const { return blocks_; }

  /// Throws InputError if any structural invariant is violated.
  void validate() const;

 private:
  std::vector<double> objective_;
  std::vector<EqRow> rows_;
  std::vector<ConeBlock> blocks_;
};

struct SolverSettings {
  double tol = 1e-7;
  long max_iter = 200000;
  bool verbose = false;
};

enum class SolveStatus { Optimal, IterLimit, NumericalFailure };

std::string to_string(SolveStatus status);

struct ConeSolution {
  SolveStatus status = SolveStatus::NumericalFailure;
  std::vector<double> x;
  double objective = 0.0;
  double residual_primal = 0.0;
  double residual_dual = 0.0;
  double residual_gap = 0.0;
  long iterations = 0;
  /// Dual certificate: row multipliers y and cone slack s with
  /// s = -c - A^T y in the dual cone; -b^T y bounds the optimum from above.
  std::vector<double> dual_rows;
  std::vector<double> dual_slack;
  double dual_objective = 0.0;
};

/// Operator-splitting (ADMM) solve. Never throws for numerical trouble;
/// inspect `status`. Throws InputError for malformed programs.
ConeSolution solve(const ConeProgram& prog, const SolverSettings& settings = {});

/// Largest violation of cone membership of x, per block kind:
/// PSD blocks report max(0, -lambda_min) / (1 + ||block||).
double cone_violation(const ConeProgram& prog, const std::vector<double>& x);

}  // namespace l1sdp::conic
