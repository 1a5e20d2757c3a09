#include "l1sdp/conic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "l1sdp/errors.hpp"
#include "l1sdp/linalg.hpp"

namespace l1sdp::conic {

using Eigen::VectorXd;

std::string to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::Free: return "free";
    case ConeKind::Nonneg: return "nonneg";
    case ConeKind::Zero: return "zero";
    case ConeKind::Psd: return "psd";
  }
  return "?";
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::IterLimit: return "iteration_limit";
    case SolveStatus::NumericalFailure: return "numerical_failure";
  }
  return "?";
}

std::size_t ConeProgram::add_block(ConeKind kind, std::size_t length) {
  if (kind == ConeKind::Psd) {
    throw InputError("use add_psd_block for PSD blocks");
  }
  const std::size_t offset = objective_.size();
  blocks_.push_back({kind, offset, length, 0});
  objective_.resize(offset + length, 0.0);
  return offset;
}

std::size_t ConeProgram::add_psd_block(int order) {
  if (order < 1) throw InputError("PSD block order must be positive");
  const std::size_t offset = objective_.size();
  const std::size_t length = SymMat::packed_size(order);
  blocks_.push_back({ConeKind::Psd, offset, length, order});
  objective_.resize(offset + length, 0.0);
  return offset;
}

void ConeProgram::add_row(std::vector<Term> terms, double rhs) {
  rows_.push_back({std::move(terms), rhs});
}

void ConeProgram::set_objective(std::size_t index, double coeff) {
  if (index >= objective_.size()) throw InputError("objective index out of range");
  objective_[index] = coeff;
}

void ConeProgram::validate() const {
  std::size_t expected = 0;
  for (const auto& blk : blocks_) {
    if (blk.offset != expected) throw InputError("cone blocks leave a gap or overlap");
    if (blk.kind == ConeKind::Psd && blk.length != SymMat::packed_size(blk.psd_order)) {
      throw InputError("PSD block length does not match its order");
    }
    expected += blk.length;
  }
  if (expected != num_vars()) throw InputError("cone blocks do not cover all variables");
  for (double c : objective_) {
    if (!std::isfinite(c)) throw InputError("objective has non-finite coefficient");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (!std::isfinite(row.rhs)) {
      throw InputError("row " + std::to_string(r) + " has non-finite rhs");
    }
    for (const auto& t : row.terms) {
      if (t.index >= num_vars() || !std::isfinite(t.coeff)) {
        throw InputError("row " + std::to_string(r) + " has an invalid term");
      }
    }
  }
}

namespace {

double inf_norm(const VectorXd& v) { return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>(); }

void project_cone(const std::vector<ConeBlock>& blocks, VectorXd& v) {
  for (const auto& blk : blocks) {
    auto seg = v.segment(static_cast<Eigen::Index>(blk.offset),
                         static_cast<Eigen::Index>(blk.length));
    switch (blk.kind) {
      case ConeKind::Free: break;
      case ConeKind::Nonneg: seg = seg.cwiseMax(0.0); break;
      case ConeKind::Zero: seg.setZero(); break;
      case ConeKind::Psd:
        project_psd_svec(std::span<double>(seg.data(), blk.length), blk.psd_order);
        break;
    }
  }
}

// Projection onto {x : A x = b} and least-squares row multipliers, via a
// Cholesky factor of A A^T.
class AffineProjector {
 public:
  AffineProjector(const Eigen::SparseMatrix<double, Eigen::RowMajor>& a, VectorXd b)
      : a_(a), b_(std::move(b)) {
    if (a_.rows() == 0) return;
    const Eigen::MatrixXd dense_a(a_);
    llt_.compute(dense_a * dense_a.transpose());
    if (llt_.info() != Eigen::Success) {
      throw InputError("equality rows are linearly dependent");
    }
    const Eigen::MatrixXd l = llt_.matrixL();
    const double min_pivot = l.diagonal().cwiseAbs().minCoeff();
    const double max_pivot = l.diagonal().cwiseAbs().maxCoeff();
    if (min_pivot <= 1e-6 * max_pivot) {
      throw InputError("equality rows are linearly dependent");
    }
  }

  VectorXd project(const VectorXd& w) const {
    if (a_.rows() == 0) return w;
    const VectorXd r = a_ * w - b_;
    return w - a_.transpose() * llt_.solve(r);
  }

  /// argmin_y ||v - A^T y||.
  VectorXd multipliers(const VectorXd& v) const {
    if (a_.rows() == 0) return VectorXd();
    return llt_.solve(a_ * v);
  }

 private:
  const Eigen::SparseMatrix<double, Eigen::RowMajor>& a_;
  VectorXd b_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

struct Certificate {
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
  double pobj = 0.0;
  double dobj = 0.0;
  VectorXd y;
};

}  // namespace

ConeSolution solve(const ConeProgram& prog, const SolverSettings& settings) {
  prog.validate();
  if (!(settings.tol > 0.0)) throw InputError("solver tol must be positive");
  if (settings.max_iter < 1) throw InputError("solver max_iter must be at least 1");

  const auto n = static_cast<Eigen::Index>(prog.num_vars());
  const auto m = static_cast<Eigen::Index>(prog.rows().size());

  Eigen::SparseMatrix<double, Eigen::RowMajor> a(m, n);
  {
    std::vector<Eigen::Triplet<double>> trips;
    for (Eigen::Index r = 0; r < m; ++r) {
      for (const auto& t : prog.rows()[static_cast<std::size_t>(r)].terms) {
        trips.emplace_back(r, static_cast<Eigen::Index>(t.index), t.coeff);
      }
    }
    a.setFromTriplets(trips.begin(), trips.end());
  }
  VectorXd b(m);
  for (Eigen::Index r = 0; r < m; ++r) b[r] = prog.rows()[static_cast<std::size_t>(r)].rhs;
  const VectorXd c = Eigen::Map<const VectorXd>(prog.objective().data(), n);

  // Work on data normalized to unit infinity norm; all cones are scale invariant.
  const double c_scale = inf_norm(c) > 0.0 ? inf_norm(c) : 1.0;
  const double b_scale = inf_norm(b) > 0.0 ? inf_norm(b) : 1.0;
  const VectorXd cs = c / c_scale;
  const VectorXd bs = b / b_scale;
  const AffineProjector affine(a, bs);

  const double b_norm = inf_norm(b);
  const double c_norm = inf_norm(c);

  // Certificate in original units from a scaled primal z and scaled dual
  // slack s (already in the dual cone).
  auto certify = [&](const VectorXd& z_s, const VectorXd& s_s) {
    Certificate cert;
    const VectorXd z = b_scale * z_s;
    const VectorXd s = c_scale * s_s;
    cert.y = c_scale * affine.multipliers(-cs - s_s);
    cert.primal = inf_norm(a * z - b) / (1.0 + b_norm);
    const VectorXd dual_res = -c - a.transpose() * cert.y - s;
    cert.dual = inf_norm(dual_res) / (1.0 + c_norm);
    cert.pobj = c.dot(z);
    cert.dobj = m > 0 ? -b.dot(cert.y) : 0.0;
    cert.gap = std::abs(cert.pobj - cert.dobj) / (1.0 + std::abs(cert.pobj) + std::abs(cert.dobj));
    return cert;
  };

  constexpr double kRelax = 1.6;
  constexpr int kCheckEvery = 10;
  constexpr int kAdaptEvery = 50;
  constexpr double kAdaptRatio = 5.0;

  double rho = 1.0;
  VectorXd z = VectorXd::Zero(n);
  VectorXd u = VectorXd::Zero(n);
  VectorXd x(n);
  VectorXd z_prev(n);
  Certificate cert;

  ConeSolution sol;
  sol.status = SolveStatus::IterLimit;

  long iter = 0;
  for (iter = 1; iter <= settings.max_iter; ++iter) {
    x = affine.project(z - u + cs / rho);
    const VectorXd x_hat = kRelax * x + (1.0 - kRelax) * z;
    z_prev = z;
    z = x_hat + u;
    project_cone(prog.blocks(), z);
    u += x_hat - z;

    if (!z.allFinite() || !u.allFinite()) {
      sol.status = SolveStatus::NumericalFailure;
      break;
    }

    const bool check = iter % kCheckEvery == 0 || iter == settings.max_iter;
    if (check) {
      cert = certify(z, -rho * u);
      if (settings.verbose && iter % 1000 == 0) {
        std::fprintf(stderr, "%8ld  pobj % .8e  dobj % .8e  rp %.2e  rd %.2e  gap %.2e  rho %.2e\n",
                     iter, cert.pobj, cert.dobj, cert.primal, cert.dual, cert.gap, rho);
      }
      if (cert.primal <= settings.tol && cert.dual <= settings.tol && cert.gap <= settings.tol) {
        sol.status = SolveStatus::Optimal;
        break;
      }
    }

    if (iter % kAdaptEvery == 0) {
      const double rp = (x - z).lpNorm<Eigen::Infinity>() / (1.0 + std::max(x.lpNorm<Eigen::Infinity>(), z.lpNorm<Eigen::Infinity>()));
      const double rd = rho * (z - z_prev).lpNorm<Eigen::Infinity>() / (1.0 + (rho * u).lpNorm<Eigen::Infinity>());
      if (rp > kAdaptRatio * rd) {
        rho *= 2.0;
        u /= 2.0;
      } else if (rd > kAdaptRatio * rp) {
        rho /= 2.0;
        u *= 2.0;
      }
    }
  }
  sol.iterations = std::min(iter, settings.max_iter);

  if (sol.status == SolveStatus::NumericalFailure) {
    sol.x.assign(static_cast<std::size_t>(n), std::numeric_limits<double>::quiet_NaN());
    sol.objective = std::numeric_limits<double>::quiet_NaN();
    return sol;
  }

  const VectorXd xs = b_scale * z;
  const VectorXd s = -c_scale * rho * u;
  sol.x.assign(xs.data(), xs.data() + n);
  sol.dual_slack.assign(s.data(), s.data() + n);
  sol.dual_rows.assign(cert.y.data(), cert.y.data() + cert.y.size());
  sol.objective = cert.pobj;
  sol.dual_objective = cert.dobj;
  sol.residual_primal = cert.primal;
  sol.residual_dual = cert.dual;
  sol.residual_gap = cert.gap;
  return sol;
}

double cone_violation(const ConeProgram& prog, const std::vector<double>& x) {
  if (x.size() != prog.num_vars()) throw InputError("solution length does not match program");
  double worst = 0.0;
  for (const auto& blk : prog.blocks()) {
    const std::span<const double> seg(x.data() + blk.offset, blk.length);
    switch (blk.kind) {
      case ConeKind::Free: break;
      case ConeKind::Nonneg:
        for (double v : seg) worst = std::max(worst, -v);
        break;
      case ConeKind::Zero:
        for (double v : seg) worst = std::max(worst, std::abs(v));
        break;
      case ConeKind::Psd: {
        const SymMat mat = smat(seg, blk.psd_order);
        const EigDecomp ed = eig_sym(mat);
        const double lmin = ed.values[blk.psd_order - 1];
        worst = std::max(worst, -lmin / (1.0 + mat.frobenius_norm()));
        break;
      }
    }
  }
  return worst;
}

}  // namespace l1sdp::conic
