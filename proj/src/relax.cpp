#include "l1sdp/relax.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "l1sdp/errors.hpp"

namespace l1sdp::relax {

using conic::ConeKind;
using conic::ConeProgram;
using conic::Term;

namespace {

struct TagName {
  RelaxationTag tag;
  std::string_view name;
};

constexpr std::array<TagName, 7> kTagNames{{
    {RelaxationTag::DnnL1, "dnn-l1"},
    {RelaxationTag::DnnL1New, "dnn-l1-new"},
    {RelaxationTag::SdpX, "sdp-x"},
    {RelaxationTag::DnnL2L1, "dnn-l2l1"},
    {RelaxationTag::DnnL2L1NewLe, "dnn-l2l1-new-le"},
    {RelaxationTag::DnnL2L1NewEq, "dnn-l2l1-new-eq"},
    {RelaxationTag::DnnLp, "dnn-lp"},
}};

// Linear functional M . S on a svec block at `offset`: coefficient svec(M).
std::vector<Term> functional(const SymMat& m, std::size_t offset, double scale = 1.0) {
  const std::vector<double> coeffs = svec(m);
  std::vector<Term> terms;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0.0) terms.push_back({offset + j, scale * coeffs[j]});
  }
  return terms;
}

SymMat all_ones(int order) {
  SymMat j(order);
  for (int c = 0; c < order; ++c)
    for (int r = 0; r <= c; ++r) j(r, c) = 1.0;
  return j;
}

// A^T A = [[I, -I], [-I, I]].
SymMat splitting_gram(int n) { return lift_qtilde(SymMat::identity(n)); }

struct LiftedForm {
  double objective_scale = 1.0;
  bool sum_is_equality = true;         // e^T Y e (= or <=) 1
  bool complementarity = false;        // Y_{i,n+i} = 0
  std::optional<SymMat> trace_like;    // scale * (M . Y) (= or <=) 1
  double trace_scale = 1.0;
  bool trace_is_equality = true;
};

// Y PSD of order 2n with a nonnegative svec duplicate; duplicate slots for
// Y_{i,n+i} live in a Zero block when complementarity is imposed.
BuiltRelaxation build_lifted(const RelaxationKind& kind, const SymMat& q, const LiftedForm& form) {
  const int n = q.order();
  const int order = 2 * n;
  const std::size_t len = SymMat::packed_size(order);

  std::vector<bool> fixed(len, false);
  if (form.complementarity) {
    for (int i = 0; i < n; ++i) fixed[SymMat::packed_index(i, n + i)] = true;
  }

  BuiltRelaxation out;
  out.kind = kind;
  out.n = n;
  ConeProgram& prog = out.program;

  const std::size_t y_off = prog.add_psd_block(order);
  const std::size_t num_fixed = form.complementarity ? static_cast<std::size_t>(n) : 0;
  const std::size_t nn_off = prog.add_block(ConeKind::Nonneg, len - num_fixed);
  const std::size_t num_slack =
      (form.sum_is_equality ? 0 : 1) + (form.trace_like && !form.trace_is_equality ? 1 : 0);
  std::size_t slack_off = 0;
  if (num_slack > 0) slack_off = prog.add_block(ConeKind::Nonneg, num_slack);
  std::size_t zero_off = 0;
  if (num_fixed > 0) zero_off = prog.add_block(ConeKind::Zero, num_fixed);

  std::size_t next_nn = nn_off;
  std::size_t next_zero = zero_off;
  for (std::size_t j = 0; j < len; ++j) {
    const std::size_t dup = fixed[j] ? next_zero++ : next_nn++;
    prog.add_row({{dup, 1.0}, {y_off + j, -1.0}}, 0.0);
  }

  std::size_t next_slack = slack_off;
  {
    auto terms = functional(all_ones(order), y_off);
    if (!form.sum_is_equality) terms.push_back({next_slack++, 1.0});
    prog.add_row(std::move(terms), 1.0);
  }
  if (form.trace_like) {
    auto terms = functional(*form.trace_like, y_off, form.trace_scale);
    if (!form.trace_is_equality) terms.push_back({next_slack++, 1.0});
    prog.add_row(std::move(terms), 1.0);
  }

  const std::vector<double> c = svec(lift_qtilde(q));
  for (std::size_t j = 0; j < len; ++j) prog.set_objective(y_off + j, form.objective_scale * c[j]);

  out.matrix = {y_off, order};
  prog.validate();
  return out;
}

// maximize Q . X  s.t. trace X = 1, e^T U e <= k, U - X >= 0, U + X >= 0, X PSD.
BuiltRelaxation build_sdp_x(const RelaxationKind& kind, const SymMat& q) {
  const int n = q.order();
  const double k = *kind.k;
  const std::size_t len = SymMat::packed_size(n);

  BuiltRelaxation out;
  out.kind = kind;
  out.n = n;
  ConeProgram& prog = out.program;

  const std::size_t x_off = prog.add_psd_block(n);
  const std::size_t u_off = prog.add_block(ConeKind::Nonneg, len);
  const std::size_t lo_off = prog.add_block(ConeKind::Nonneg, len);  // U - X
  const std::size_t hi_off = prog.add_block(ConeKind::Nonneg, len);  // U + X
  const std::size_t slack = prog.add_block(ConeKind::Nonneg, 1);

  for (std::size_t j = 0; j < len; ++j) {
    prog.add_row({{lo_off + j, 1.0}, {u_off + j, -1.0}, {x_off + j, 1.0}}, 0.0);
    prog.add_row({{hi_off + j, 1.0}, {u_off + j, -1.0}, {x_off + j, -1.0}}, 0.0);
  }
  prog.add_row(functional(SymMat::identity(n), x_off), 1.0);
  auto terms = functional(all_ones(n), u_off);
  terms.push_back({slack, 1.0});
  prog.add_row(std::move(terms), k);

  const std::vector<double> c = svec(q);
  for (std::size_t j = 0; j < len; ++j) prog.set_objective(x_off + j, c[j]);

  out.matrix = {x_off, n};
  out.abs_bound = MatrixSlot{u_off, n};
  prog.validate();
  return out;
}

}  // namespace

std::string_view name(RelaxationTag tag) {
  for (const auto& tn : kTagNames)
    if (tn.tag == tag) return tn.name;
  return "?";
}

std::optional<RelaxationTag> parse_tag(std::string_view text) {
  for (const auto& tn : kTagNames)
    if (tn.name == text) return tn.tag;
  return std::nullopt;
}

bool needs_k(RelaxationTag tag) {
  return tag == RelaxationTag::SdpX || tag == RelaxationTag::DnnL2L1 ||
         tag == RelaxationTag::DnnL2L1NewLe || tag == RelaxationTag::DnnL2L1NewEq;
}

bool needs_p(RelaxationTag tag) { return tag == RelaxationTag::DnnLp; }

void RelaxationKind::validate(int n) const {
  if (n < 1) throw InputError("matrix order must be at least 1");
  if (needs_k(tag)) {
    if (!k) throw InputError(std::string(name(tag)) + " requires k");
    if (!std::isfinite(*k) || *k < 1.0 || *k > n) {
      throw InputError("k = " + std::to_string(*k) + " is outside [1, n] = [1, " +
                       std::to_string(n) + "]");
    }
  }
  if (needs_p(tag)) {
    if (!p) throw InputError(std::string(name(tag)) + " requires p");
    if (!std::isfinite(*p) || *p <= 1.0 || *p >= 2.0) {
      throw InputError("p = " + std::to_string(*p) + " is outside (1, 2)");
    }
  }
}

SymMat lift_qtilde(const SymMat& q) {
  const int n = q.order();
  SymMat out(2 * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      const double v = q(i, j);
      out(i, j) = v;
      out(n + i, n + j) = v;
      out(i, n + j) = -v;
      out(j, n + i) = -v;
    }
  }
  return out;
}

Eigen::MatrixXd splitting_matrix(int n) {
  if (n < 1) throw InputError("splitting matrix needs n >= 1");
  Eigen::MatrixXd a(n, 2 * n);
  a << Eigen::MatrixXd::Identity(n, n), -Eigen::MatrixXd::Identity(n, n);
  return a;
}

double holder_factor(int n, double p) {
  return std::pow(static_cast<double>(n), 2.0 * (p - 1.0) / p);
}

BuiltRelaxation build(const RelaxationKind& kind, const SymMat& q) {
  if (!q.all_finite()) throw InputError("Q has non-finite entries");
  const int n = q.order();
  kind.validate(n);

  LiftedForm form;
  switch (kind.tag) {
    case RelaxationTag::DnnL1:
      return build_lifted(kind, q, form);
    case RelaxationTag::DnnL1New:
      form.sum_is_equality = false;
      form.complementarity = true;
      return build_lifted(kind, q, form);
    case RelaxationTag::SdpX:
      return build_sdp_x(kind, q);
    case RelaxationTag::DnnL2L1:
      form.objective_scale = *kind.k;
      form.trace_like = splitting_gram(n);
      form.trace_scale = *kind.k;
      return build_lifted(kind, q, form);
    case RelaxationTag::DnnL2L1NewLe:
      form.objective_scale = *kind.k;
      form.sum_is_equality = false;
      form.complementarity = true;
      form.trace_like = splitting_gram(n);
      form.trace_scale = *kind.k;
      return build_lifted(kind, q, form);
    case RelaxationTag::DnnL2L1NewEq:
      form.objective_scale = *kind.k;
      form.complementarity = true;
      form.trace_like = SymMat::identity(2 * n);
      form.trace_scale = *kind.k;
      return build_lifted(kind, q, form);
    case RelaxationTag::DnnLp: {
      const double s = holder_factor(n, *kind.p);
      form.objective_scale = s;
      form.sum_is_equality = false;
      form.complementarity = true;
      form.trace_like = SymMat::identity(2 * n);
      form.trace_scale = s;
      form.trace_is_equality = false;
      return build_lifted(kind, q, form);
    }
  }
  throw InputError("unknown relaxation");
}

SymMat decode_matrix(const BuiltRelaxation& built, const conic::ConeSolution& sol) {
  if (sol.x.size() != built.program.num_vars()) {
    throw InputError("solution does not belong to this relaxation");
  }
  const MatrixSlot& slot = built.matrix;
  const std::span<const double> seg(sol.x.data() + slot.offset, SymMat::packed_size(slot.order));
  return smat(seg, slot.order);
}

RelaxationResult solve(const RelaxationKind& kind, const SymMat& q,
                       const conic::SolverSettings& settings) {
  const auto start = std::chrono::steady_clock::now();
  const BuiltRelaxation built = build(kind, q);
  RelaxationResult out;
  out.solution = conic::solve(built.program, settings);
  if (out.solution.status == conic::SolveStatus::NumericalFailure) {
    throw NumericalError(std::string(name(kind.tag)) + ": solver hit a non-finite value");
  }
  out.value = out.solution.objective;
  out.matrix = decode_matrix(built, out.solution);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

double bound_b2(const SymMat& q) { return std::max(lambda_max(q), 0.0); }

double bound_b1(const SymMat& q, double p, const conic::SolverSettings& settings) {
  if (!std::isfinite(p) || p <= 1.0 || p >= 2.0) {
    throw InputError("p = " + std::to_string(p) + " is outside (1, 2)");
  }
  const RelaxationResult r = solve({RelaxationTag::DnnL1, std::nullopt, std::nullopt}, q, settings);
  if (r.solution.status != conic::SolveStatus::Optimal) {
    throw NumericalError("dnn-l1 did not converge while computing B1");
  }
  return holder_factor(q.order(), p) * r.value;
}

SymMat repair_complementarity(const SymMat& y_star, const SymMat& q) {
  const int n = q.order();
  if (y_star.order() != 2 * n) {
    throw InputError("Y must have order 2n = " + std::to_string(2 * n));
  }
  for (int i = 0; i < n; ++i) {
    if (q(i, i) < 0.0) {
      throw PreconditionError("repair needs diag(Q) >= 0, but Q(" + std::to_string(i) + "," +
                              std::to_string(i) + ") = " + std::to_string(q(i, i)));
    }
  }
  SymMat y = y_star;
  for (int i = 0; i < n; ++i) {
    const double delta = y(i, n + i);
    if (delta == 0.0) continue;
    y(i, i) += delta;
    y(n + i, n + i) += delta;
    y(i, n + i) = 0.0;
  }
  return y;
}

SymMat extract_x(const SymMat& y, double k) {
  if (y.order() % 2 != 0) throw InputError("Y must have even order");
  const int n = y.order() / 2;
  SymMat x(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      x(i, j) = k * (y(i, j) - y(i, n + j) - y(n + i, j) + y(n + i, n + j));
    }
  }
  return x;
}

NewEqCertificate certify_new_eq(const SymMat& q, double k, std::optional<double> v_dnn_l2l1,
                                double tol) {
  NewEqCertificate cert;
  const EigDecomp ed = eig_sym(q);
  cert.lambda_max = ed.values[0];
  const double scale = 1.0 + std::abs(cert.lambda_max);
  cert.simple_top_eigenvalue = q.order() == 1 || ed.values[0] - ed.values[1] > 1e-8 * scale;
  cert.top_eigvec_l1 = ed.vectors.col(0).lpNorm<1>();
  cert.eigvec_condition =
      cert.simple_top_eigenvalue && cert.top_eigvec_l1 > std::sqrt(k) * (1.0 + 1e-9);
  if (v_dnn_l2l1) {
    // The solver value carries an error of order tol; demand a clear margin.
    cert.dnn_condition = *v_dnn_l2l1 < cert.lambda_max - 100.0 * tol * scale;
  }
  cert.certified = cert.eigvec_condition || cert.dnn_condition.value_or(false);
  return cert;
}

}  // namespace l1sdp::relax
