#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "l1sdp/linalg.hpp"

namespace l1sdp::oracle {

enum class Method { BruteForce, MultiStart, Rounding };

std::string to_string(Method method);

/// A feasible point in x-space together with its objective x^T Q x.
struct OracleResult {
  double value = 0.0;
  Eigen::VectorXd maximizer;
  Method method = Method::BruteForce;
};

/// Largest n accepted by qpl1_exact_small.
inline constexpr int kMaxExactOrder = 8;

/// Exact max of x^T Q x over the l1 unit ball by enumerating every support of
/// the equivalent simplex-constrained problem in R^{2n} and solving its KKT
/// system. Throws InputError for n > kMaxExactOrder.
OracleResult qpl1_exact_small(const SymMat& q);

/// Cheap lower bound on the l1-ball problem for any n: best of the vertices
/// +-e_i, and the l1-normalized top eigenvectors of Q and of A Y A^T.
OracleResult qpl1_rounding(const SymMat& q, const SymMat& y_star);

/// Multi-start ascent for max x^T Q x s.t. ||x||_2 = 1, ||x||_1^2 <= k.
/// Restart 0 starts from the top eigenvector of Q, the rest from seeded
/// uniform points on the sphere.
OracleResult qpl2l1_heuristic(const SymMat& q, double k, int restarts, std::uint64_t seed,
                              int max_iter = 500);

/// Rounding lower bound for max x^T Q x over the lp unit ball: top
/// eigenvectors of A Y* A^T and of Q, each rescaled to unit lp norm.
OracleResult qplp_lower_bound(const SymMat& q, double p, const SymMat& y_star);

double lp_norm(const Eigen::VectorXd& x, double p);

/// x^T Q x evaluated entrywise from the packed storage.
double quadratic_form(const SymMat& q, const Eigen::VectorXd& x);

/// Maximizer of <v, x> over {||x||_2 = 1, ||x||_1 <= radius}: normalized
/// soft-thresholding of v at the level that meets the l1 radius.
Eigen::VectorXd sphere_l1_argmax(const Eigen::VectorXd& v, double radius);

}  // namespace l1sdp::oracle
