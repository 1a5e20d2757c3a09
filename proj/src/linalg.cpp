#include "l1sdp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "l1sdp/errors.hpp"

namespace l1sdp {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr int kMaxSweeps = 100;

void require_finite(const SymMat& m) {
  if (!m.all_finite()) throw InputError("matrix has non-finite entries");
}

// In-place cyclic Jacobi on a dense symmetric matrix. On return `a` is
// (numerically) diagonal and `v` holds the accumulated rotations.
void jacobi_diagonalize(Eigen::MatrixXd& a, Eigen::MatrixXd& v) {
  const Eigen::Index n = a.rows();
  v.setIdentity(n, n);
  if (n < 2) return;

  const double scale = a.norm();
  if (scale == 0.0) return;
  const double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) off += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off) <= eps * scale) return;

    for (Eigen::Index q = 1; q < n; ++q) {
      for (Eigen::Index p = 0; p < q; ++p) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Rotation would be below roundoff in both diagonal entries.
        if (std::abs(apq) <= eps * 1e-3 * (std::abs(app) + std::abs(aqq)) &&
            sweep > 3) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  throw NumericalError("Jacobi eigensolver did not converge");
}

EigDecomp eig_dense(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd v;
  jacobi_diagonalize(a, v);

  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  EigDecomp out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index src = perm[static_cast<std::size_t>(c)];
    out.values[c] = a(src, src);
    auto col = out.vectors.col(c);
    col = v.col(src);
    for (Eigen::Index k = 0; k < n; ++k) {
      if (std::abs(col[k]) > 1e-12) {
        if (col[k] < 0.0) col = -col;
        break;
      }
    }
  }
  return out;
}

Eigen::MatrixXd clamp_reconstruct(const EigDecomp& ed) {
  const Eigen::VectorXd pos = ed.values.cwiseMax(0.0);
  Eigen::MatrixXd out = ed.vectors * pos.asDiagonal() * ed.vectors.transpose();
  return 0.5 * (out + out.transpose());
}

}  // namespace

SymMat::SymMat(int order) : order_(order), data_(packed_size(order), 0.0) {
  if (order < 0) throw InputError("matrix order must be nonnegative");
}

SymMat SymMat::identity(int order) {
  SymMat m(order);
  for (int i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

SymMat SymMat::diagonal(std::span<const double> diag) {
  SymMat m(static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    m(static_cast<int>(i), static_cast<int>(i)) = diag[i];
  }
  require_finite(m);
  return m;
}

SymMat SymMat::from_dense(const Eigen::MatrixXd& dense) {
  if (dense.rows() != dense.cols()) {
    throw InputError("matrix must be square, got " + std::to_string(dense.rows()) +
                     "x" + std::to_string(dense.cols()));
  }
  const int n = static_cast<int>(dense.rows());
  SymMat m(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) m(i, j) = 0.5 * (dense(i, j) + dense(j, i));
  require_finite(m);
  return m;
}

SymMat SymMat::from_rows(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd dense(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw InputError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (Eigen::Index j = 0; j < n; ++j) dense(i, j) = row[static_cast<std::size_t>(j)];
  }
  return from_dense(dense);
}

Eigen::MatrixXd SymMat::dense() const {
  Eigen::MatrixXd out(order_, order_);
  for (int j = 0; j < order_; ++j)
    for (int i = 0; i <= j; ++i) out(i, j) = out(j, i) = (*this)(i, j);
  return out;
}

double SymMat::dot(const SymMat& other) const {
  if (other.order_ != order_) throw InputError("order mismatch in inner product");
  double s = 0.0;
  for (int j = 0; j < order_; ++j) {
    for (int i = 0; i < j; ++i) s += 2.0 * (*this)(i, j) * other(i, j);
    s += (*this)(j, j) * other(j, j);
  }
  return s;
}

double SymMat::frobenius_norm() const { return std::sqrt(dot(*this)); }

double SymMat::trace() const {
  double s = 0.0;
  for (int i = 0; i < order_; ++i) s += (*this)(i, i);
  return s;
}

double SymMat::sum() const {
  double s = 0.0;
  for (int j = 0; j < order_; ++j) {
    for (int i = 0; i < j; ++i) s += 2.0 * (*this)(i, j);
    s += (*this)(j, j);
  }
  return s;
}

bool SymMat::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

SymMat& SymMat::operator+=(const SymMat& other) {
  if (other.order_ != order_) throw InputError("order mismatch in addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

SymMat& SymMat::operator-=(const SymMat& other) {
  if (other.order_ != order_) throw InputError("order mismatch in subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

SymMat& SymMat::operator*=(double alpha) {
  for (double& x : data_) x *= alpha;
  return *this;
}

EigDecomp eig_sym(const SymMat& m) {
  require_finite(m);
  return eig_dense(m.dense());
}

double lambda_max(const SymMat& m) {
  if (m.order() == 0) throw InputError("lambda_max of an empty matrix");
  return eig_sym(m).values[0];
}

SymMat project_psd(const SymMat& m) {
  return SymMat::from_dense(clamp_reconstruct(eig_sym(m)));
}

std::vector<double> svec(const SymMat& m) {
  std::vector<double> v(SymMat::packed_size(m.order()));
  for (int j = 0; j < m.order(); ++j) {
    for (int i = 0; i < j; ++i) v[SymMat::packed_index(i, j)] = kSqrt2 * m(i, j);
    v[SymMat::packed_index(j, j)] = m(j, j);
  }
  return v;
}

int svec_order(std::size_t len) {
  const auto m = static_cast<int>(std::lround((std::sqrt(8.0 * static_cast<double>(len) + 1.0) - 1.0) / 2.0));
  if (m < 0 || SymMat::packed_size(m) != len) {
    throw InputError("vector length " + std::to_string(len) + " is not a triangular number");
  }
  return m;
}

SymMat smat(std::span<const double> v, int order) {
  if (order < 0 || v.size() != SymMat::packed_size(order)) {
    throw InputError("svec length " + std::to_string(v.size()) + " does not match order " +
                     std::to_string(order));
  }
  SymMat m(order);
  for (int j = 0; j < order; ++j) {
    for (int i = 0; i < j; ++i) m(i, j) = v[SymMat::packed_index(i, j)] / kSqrt2;
    m(j, j) = v[SymMat::packed_index(j, j)];
  }
  require_finite(m);
  return m;
}

void project_psd_svec(std::span<double> v, int order) {
  Eigen::MatrixXd a(order, order);
  for (int j = 0; j < order; ++j) {
    for (int i = 0; i < j; ++i) a(i, j) = a(j, i) = v[SymMat::packed_index(i, j)] / kSqrt2;
    a(j, j) = v[SymMat::packed_index(j, j)];
  }
  if (!a.allFinite()) throw NumericalError("non-finite entry in PSD projection");
  const EigDecomp ed = eig_dense(a);
  if (ed.values[order - 1] >= 0.0) return;
  const Eigen::MatrixXd p = clamp_reconstruct(ed);
  for (int j = 0; j < order; ++j) {
    for (int i = 0; i < j; ++i) v[SymMat::packed_index(i, j)] = kSqrt2 * p(i, j);
    v[SymMat::packed_index(j, j)] = p(j, j);
  }
}

}  // namespace l1sdp
