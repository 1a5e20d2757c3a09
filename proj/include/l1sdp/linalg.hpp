#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace l1sdp {

/// Dense symmetric matrix stored as its packed upper triangle.
///
/// Entry (i, j) and (j, i) share one storage cell, so symmetry holds by
/// construction. Packing is column-wise over the upper triangle:
/// (0,0), (0,1), (1,1), (0,2), (1,2), (2,2), ...
class SymMat {
 public:
  SymMat() = default;
  /// Zero matrix of order m.
  explicit SymMat(int order);

  static SymMat identity(int order);
  static SymMat diagonal(std::span<const double> diag);
  /// Symmetrizes as (M + M^T) / 2. Throws InputError on non-square or non-finite input.
  static SymMat from_dense(const Eigen::MatrixXd& dense);
  /// Row-major full matrix, symmetrized.
  static SymMat from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return order_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }

  Eigen::MatrixXd dense() const;
  std::span<const double> packed() const { return data_; }

  /// Frobenius inner product A . B = trace(A B).
  double dot(const SymMat& other) const;
  double frobenius_norm() const;
  double trace() const;
  /// Sum of all entries, e^T M e.
  double sum() const;
  bool all_finite() const;

  SymMat& operator+=(const SymMat& other);
  SymMat& operator-=(const SymMat& other);
  SymMat& operator*=(double alpha);
  friend SymMat operator+(SymMat a, const SymMat& b) { return a += b; }
  friend SymMat operator-(SymMat a, const SymMat& b) { return a -= b; }
  friend SymMat operator*(double alpha, SymMat a) { return a *= alpha; }

  static constexpr std::size_t packed_size(int order) {
    return static_cast<std::size_t>(order) * static_cast<std::size_t>(order + 1) / 2;
  }
  static constexpr std::size_t packed_index(int i, int j) {
    if (i > j) {
      const int t = i;
      i = j;
      j = t;
    }
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(j + 1) / 2 +
           static_cast<std::size_t>(i);
  }

 private:
  std::size_t index(int i, int j) const { return packed_index(i, j); }

  int order_ = 0;
  std::vector<double> data_;
};

struct EigDecomp {
  Eigen::VectorXd values;   ///< descending
  Eigen::MatrixXd vectors;  ///< column i pairs with values[i]
};

/// Cyclic Jacobi eigendecomposition. Eigenvalues are sorted descending and
/// each eigenvector has its first non-negligible component nonnegative.
EigDecomp eig_sym(const SymMat& m);

double lambda_max(const SymMat& m);

/// Frobenius-nearest PSD matrix: V max(Lambda, 0) V^T.
SymMat project_psd(const SymMat& m);

/// Isometric vectorization: off-diagonal slots carry a factor sqrt(2), so
/// svec(A) . svec(B) == A . B. Slot order matches SymMat packing.
std::vector<double> svec(const SymMat& m);
SymMat smat(std::span<const double> v, int order);

/// Order m such that m(m+1)/2 == len; throws InputError if none exists.
int svec_order(std::size_t len);

/// Eigenvalue clamp working directly in svec coordinates, in place.
/// Used by the conic solver's PSD cone projection.
void project_psd_svec(std::span<double> v, int order);

}  // namespace l1sdp
