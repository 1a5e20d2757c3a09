#include "l1sdp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "l1sdp/errors.hpp"
#include "l1sdp/random.hpp"
#include "l1sdp/relax.hpp"

namespace l1sdp::oracle {

namespace {

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

// Keeps the best candidate: larger value wins, ties go to the
// lexicographically smaller maximizer.
class Best {
 public:
  Best(int n, Method method) {
    result_.maximizer = Eigen::VectorXd::Zero(n);
    result_.method = method;
  }

  void offer(double value, const Eigen::VectorXd& x) {
    const double tie = 1e-12 * (1.0 + std::abs(value));
    if (!seeded_ || value > result_.value + tie ||
        (std::abs(value - result_.value) <= tie && lex_less(x, result_.maximizer))) {
      result_.value = value;
      result_.maximizer = x;
      seeded_ = true;
    }
  }

  OracleResult take() && { return std::move(result_); }

 private:
  OracleResult result_;
  bool seeded_ = false;
};

void check_p(double p) {
  if (!std::isfinite(p) || p <= 1.0 || p >= 2.0) {
    throw InputError("p = " + std::to_string(p) + " is outside (1, 2)");
  }
}

Eigen::VectorXd top_eigvec(const SymMat& m) { return eig_sym(m).vectors.col(0); }

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::BruteForce: return "brute_force";
    case Method::MultiStart: return "multi_start";
    case Method::Rounding: return "rounding";
  }
  return "?";
}

double lp_norm(const Eigen::VectorXd& x, double p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]), p);
  return std::pow(s, 1.0 / p);
}

double quadratic_form(const SymMat& q, const Eigen::VectorXd& x) {
  double s = 0.0;
  for (int j = 0; j < q.order(); ++j) {
    for (int i = 0; i < j; ++i) s += 2.0 * q(i, j) * x[i] * x[j];
    s += q(j, j) * x[j] * x[j];
  }
  return s;
}

OracleResult qpl1_exact_small(const SymMat& q) {
  const int n = q.order();
  if (n < 1) throw InputError("Q must have order at least 1");
  if (n > kMaxExactOrder) {
    throw InputError("exact l1 oracle is limited to n <= " + std::to_string(kMaxExactOrder) +
                     ", got n = " + std::to_string(n));
  }
  if (!q.all_finite()) throw InputError("Q has non-finite entries");

  const int m = 2 * n;
  const Eigen::MatrixXd qt = relax::lift_qtilde(q).dense();
  const Eigen::MatrixXd a = relax::splitting_matrix(n);

  Best best(n, Method::BruteForce);
  best.offer(0.0, Eigen::VectorXd::Zero(n));

  std::vector<int> support;
  support.reserve(static_cast<std::size_t>(m));
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    support.clear();
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) support.push_back(i);
    const auto s = static_cast<Eigen::Index>(support.size());

    // [2 Q~_SS  -e] [y_S   ]   [0]
    // [  e^T     0] [lambda] = [1]
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(s + 1, s + 1);
    for (Eigen::Index r = 0; r < s; ++r) {
      for (Eigen::Index c = 0; c < s; ++c) kkt(r, c) = 2.0 * qt(support[r], support[c]);
      kkt(r, s) = -1.0;
      kkt(s, r) = 1.0;
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
    rhs[s] = 1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    lu.setThreshold(1e-11);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd sol = lu.solve(rhs);

    Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
    bool feasible = true;
    for (Eigen::Index r = 0; r < s; ++r) {
      if (!(sol[r] >= -1e-12)) {
        feasible = false;
        break;
      }
      y[support[r]] = std::max(sol[r], 0.0);
    }
    if (!feasible || y.sum() <= 0.0) continue;
    y /= y.sum();

    const Eigen::VectorXd x = a * y;
    best.offer(quadratic_form(q, x), x);
  }
  return std::move(best).take();
}

OracleResult qpl1_rounding(const SymMat& q, const SymMat& y_star) {
  const int n = q.order();
  if (y_star.order() != 2 * n) throw InputError("Y must have order 2n");
  Best best(n, Method::Rounding);
  best.offer(0.0, Eigen::VectorXd::Zero(n));
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[i] = 1.0;
    best.offer(q(i, i), e);
    best.offer(q(i, i), -e);
  }
  for (const Eigen::VectorXd& v : {top_eigvec(relax::extract_x(y_star, 1.0)), top_eigvec(q)}) {
    const double l1 = v.lpNorm<1>();
    if (l1 <= 0.0) continue;
    const Eigen::VectorXd x = v / l1;
    best.offer(quadratic_form(q, x), x);
  }
  return std::move(best).take();
}

Eigen::VectorXd sphere_l1_argmax(const Eigen::VectorXd& v, double radius) {
  const Eigen::Index n = v.size();
  const double vmax = v.cwiseAbs().maxCoeff();
  if (!(vmax > 0.0)) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[0] = 1.0;
    return e;
  }
  auto shrink = [&](double tau) {
    Eigen::VectorXd s(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double a = std::abs(v[i]) - tau;
      s[i] = a > 0.0 ? std::copysign(a, v[i]) : 0.0;
    }
    return s;
  };
  auto ratio = [](const Eigen::VectorXd& s) { return s.lpNorm<1>() / s.norm(); };

  const Eigen::VectorXd unit = v / v.norm();
  if (unit.lpNorm<1>() <= radius) return unit;

  // l1/l2 of the shrunk vector decreases in tau; bisect, keeping the
  // feasible (upper) end.
  double lo = 0.0;
  double hi = vmax;
  Eigen::VectorXd feasible;
  {
    // Just below vmax only the largest-magnitude entries survive.
    const Eigen::VectorXd s = shrink(vmax * (1.0 - 1e-12));
    if (s.norm() > 0.0 && ratio(s) <= radius) {
      feasible = s;
    } else {
      Eigen::Index arg = 0;
      v.cwiseAbs().maxCoeff(&arg);
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e[arg] = std::copysign(1.0, v[arg]);
      return e;
    }
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * vmax; ++it) {
    const double mid = 0.5 * (lo + hi);
    const Eigen::VectorXd s = shrink(mid);
    if (s.norm() > 0.0 && ratio(s) <= radius) {
      hi = mid;
      feasible = s;
    } else {
      lo = mid;
    }
  }
  return feasible / feasible.norm();
}

OracleResult qpl2l1_heuristic(const SymMat& q, double k, int restarts, std::uint64_t seed,
                              int max_iter) {
  const int n = q.order();
  if (n < 1) throw InputError("Q must have order at least 1");
  if (!std::isfinite(k) || k < 1.0 || k > n) {
    throw InputError("k = " + std::to_string(k) + " is outside [1, n]");
  }
  if (restarts < 1) throw InputError("restarts must be at least 1");

  const EigDecomp ed = eig_sym(q);
  // Shifting by -lambda_min makes the objective convex, so each
  // linearize-and-maximize step cannot decrease it.
  const double shift = std::max(0.0, -ed.values[n - 1]);
  const Eigen::MatrixXd qs = q.dense() + shift * Eigen::MatrixXd::Identity(n, n);
  const double radius = std::sqrt(k);

  SplitMix64 rng(seed);
  Best best(n, Method::MultiStart);
  for (int r = 0; r < restarts; ++r) {
    Eigen::VectorXd start(n);
    if (r == 0) {
      start = ed.vectors.col(0);
    } else {
      for (int i = 0; i < n; ++i) start[i] = rng.normal();
    }
    Eigen::VectorXd x = sphere_l1_argmax(start, radius);
    double value = quadratic_form(q, x);
    for (int it = 0; it < max_iter; ++it) {
      const Eigen::VectorXd next = sphere_l1_argmax(qs * x, radius);
      const double next_value = quadratic_form(q, next);
      const double step = (next - x).norm();
      x = next;
      const bool stalled = next_value - value <= 1e-15 * (1.0 + std::abs(value)) && step < 1e-12;
      value = next_value;
      if (stalled) break;
    }
    best.offer(value, x);
  }
  return std::move(best).take();
}

OracleResult qplp_lower_bound(const SymMat& q, double p, const SymMat& y_star) {
  check_p(p);
  const int n = q.order();
  if (y_star.order() != 2 * n) throw InputError("Y must have order 2n");
  Best best(n, Method::Rounding);
  for (const Eigen::VectorXd& v : {top_eigvec(relax::extract_x(y_star, 1.0)), top_eigvec(q)}) {
    const double norm = lp_norm(v, p);
    if (!(norm > 0.0)) continue;
    const Eigen::VectorXd x = v / norm;
    best.offer(quadratic_form(q, x), x);
  }
  return std::move(best).take();
}

}  // namespace l1sdp::oracle
