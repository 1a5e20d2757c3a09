#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "l1sdp/conic.hpp"
#include "l1sdp/linalg.hpp"

namespace l1sdp::relax {

enum class RelaxationTag {
  DnnL1,         ///< e^T Y e = 1, Y >= 0, Y PSD
  DnnL1New,      ///< e^T Y e <= 1, Y_{i,n+i} = 0, Y >= 0, Y PSD
  SdpX,          ///< trace X = 1, e^T |X| e <= k, X PSD
  DnnL2L1,       ///< k trace(A^T A Y) = 1, e^T Y e = 1, Y >= 0, Y PSD
  DnnL2L1NewLe,  ///< k trace(A^T A Y) = 1, e^T Y e <= 1, Y_{i,n+i} = 0, ...
  DnnL2L1NewEq,  ///< k trace(Y) = 1, e^T Y e = 1, Y_{i,n+i} = 0, ...
  DnnLp,         ///< s trace(Y) <= 1, e^T Y e <= 1, Y_{i,n+i} = 0, s = n^{2(p-1)/p}
};

/// Command-line name, e.g. "dnn-l2l1-new-eq".
std::string_view name(RelaxationTag tag);
std::optional<RelaxationTag> parse_tag(std::string_view name);
bool needs_k(RelaxationTag tag);
bool needs_p(RelaxationTag tag);

struct RelaxationKind {
  RelaxationTag tag = RelaxationTag::DnnL1;
  std::optional<double> k;
  std::optional<double> p;

  /// Throws InputError unless 1 <= k <= n for the k-parameterized tags and
  /// 1 < p < 2 for DnnLp.
  void validate(int n) const;
};

/// Location of a svec matrix inside a program's variable vector.
struct MatrixSlot {
  std::size_t offset = 0;
  int order = 0;
};

struct BuiltRelaxation {
  conic::ConeProgram program;
  RelaxationKind kind;
  int n = 0;
  /// Y (order 2n) for the lifted forms, X (order n) for SdpX.
  MatrixSlot matrix;
  /// SdpX only: the elementwise bound U >= |X|.
  std::optional<MatrixSlot> abs_bound;
};

/// [[Q, -Q], [-Q, Q]].
SymMat lift_qtilde(const SymMat& q);

/// A = [I, -I], n x 2n.
Eigen::MatrixXd splitting_matrix(int n);

/// Hoelder factor n^{2(p-1)/p}.
double holder_factor(int n, double p);

BuiltRelaxation build(const RelaxationKind& kind, const SymMat& q);

SymMat decode_matrix(const BuiltRelaxation& built, const conic::ConeSolution& sol);

struct RelaxationResult {
  double value = 0.0;
  SymMat matrix;  ///< Y or X at the returned point
  conic::ConeSolution solution;
  double seconds = 0.0;
};

/// Builds and solves. Throws NumericalError on NumericalFailure; IterLimit is
/// returned to the caller with status preserved in `solution`.
RelaxationResult solve(const RelaxationKind& kind, const SymMat& q,
                       const conic::SolverSettings& settings = {});

/// max{lambda_max(Q), 0}.
double bound_b2(const SymMat& q);

/// n^{2(p-1)/p} * v(DnnL1). Throws if the DnnL1 solve does not reach Optimal.
double bound_b1(const SymMat& q, double p, const conic::SolverSettings& settings = {});

/// Zeroes every Y_{i,n+i} by adding Z with Z_ii = Z_{n+i,n+i} = delta,
/// Z_{i,n+i} = -delta, delta = Y_{i,n+i}. Objective Q~ . Y never decreases
/// when diag(Q) >= 0; throws PreconditionError otherwise.
SymMat repair_complementarity(const SymMat& y_star, const SymMat& q);

/// k A Y A^T.
SymMat extract_x(const SymMat& y, double k);

/// Whether v(DnnL2L1NewEq) is a certified upper bound of the sparse-PCA
/// relaxation. It is when v(QPL2L1) < lambda_max, which holds if either
/// v(DnnL2L1) < lambda_max, or the top eigenvalue is simple and its unit
/// eigenvector v has ||v||_1 > sqrt(k).
struct NewEqCertificate {
  double lambda_max = 0.0;
  bool simple_top_eigenvalue = false;
  double top_eigvec_l1 = 0.0;
  bool eigvec_condition = false;
  std::optional<bool> dnn_condition;
  bool certified = false;
};

NewEqCertificate certify_new_eq(const SymMat& q, double k, std::optional<double> v_dnn_l2l1,
                                double tol);

}  // namespace l1sdp::relax
