#include "l1sdp/conic.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "l1sdp/errors.hpp"
#include "l1sdp/random.hpp"
#include "test_support.hpp"

namespace l1sdp::conic {
namespace {

// maximize C . X  s.t. trace(X) (== or <=) 1, X PSD.
ConeProgram trace_program(const SymMat& c, bool inequality) {
  ConeProgram prog;
  const int m = c.order();
  const std::size_t x = prog.add_psd_block(m);
  std::vector<Term> terms;
  for (int i = 0; i < m; ++i) terms.push_back({x + SymMat::packed_index(i, i), 1.0});
  if (inequality) {
    const std::size_t slack = prog.add_block(ConeKind::Nonneg, 1);
    terms.push_back({slack, 1.0});
  }
  prog.add_row(std::move(terms), 1.0);
  const std::vector<double> cv = svec(c);
  for (std::size_t j = 0; j < cv.size(); ++j) prog.set_objective(x + j, cv[j]);
  return prog;
}

void expect_consistent(const ConeProgram& prog, const ConeSolution& sol, double tol) {
  ASSERT_EQ(sol.status, SolveStatus::Optimal);
  EXPECT_LE(std::max({sol.residual_primal, sol.residual_dual, sol.residual_gap}), tol);
  const auto r = testing::recompute_residuals(prog, sol);
  EXPECT_NEAR(r.primal, sol.residual_primal, 10 * tol);
  EXPECT_NEAR(r.dual, sol.residual_dual, 10 * tol);
  EXPECT_NEAR(r.gap, sol.residual_gap, 10 * tol);
  EXPECT_LE(cone_violation(prog, sol.x), tol);
}

TEST(ConeProgram, BlocksPartitionVariables) {
  ConeProgram prog;
  EXPECT_EQ(prog.add_psd_block(3), 0u);
  EXPECT_EQ(prog.add_block(ConeKind::Nonneg, 4), 6u);
  EXPECT_EQ(prog.add_block(ConeKind::Zero, 2), 10u);
  EXPECT_EQ(prog.num_vars(), 12u);
  EXPECT_NO_THROW(prog.validate());
}

TEST(ConeProgram, RejectsBadRows) {
  ConeProgram prog;
  prog.add_block(ConeKind::Free, 2);
  prog.add_row({{5, 1.0}}, 0.0);
  EXPECT_THROW(prog.validate(), InputError);

  ConeProgram nan_rhs;
  nan_rhs.add_block(ConeKind::Free, 2);
  nan_rhs.add_row({{0, 1.0}}, std::nan(""));
  EXPECT_THROW(nan_rhs.validate(), InputError);

  ConeProgram psd_via_add_block;
  EXPECT_THROW(psd_via_add_block.add_block(ConeKind::Psd, 3), InputError);
}

TEST(ConeProgram, DependentRowsRejected) {
  ConeProgram prog;
  prog.add_block(ConeKind::Nonneg, 2);
  prog.add_row({{0, 1.0}, {1, 1.0}}, 1.0);
  prog.add_row({{0, 2.0}, {1, 2.0}}, 2.0);
  EXPECT_THROW(solve(prog), InputError);
}

TEST(Solve, TraceObjectiveForcedToOne) {
  const ConeProgram prog = trace_program(SymMat::identity(3), false);
  const ConeSolution sol = solve(prog);
  expect_consistent(prog, sol, 1e-7);
  EXPECT_NEAR(sol.objective, 1.0, 1e-6);
}

TEST(Solve, DiagonalObjectivePicksLargestEigenvalue) {
  const std::vector<double> d{1.0, 2.0, 3.0};
  const ConeProgram prog = trace_program(SymMat::diagonal(d), false);
  const ConeSolution sol = solve(prog);
  expect_consistent(prog, sol, 1e-7);
  EXPECT_NEAR(sol.objective, 3.0, 1e-6);
}

TEST(Solve, SimpleLinearProgram) {
  // max x0 + 2 x1  s.t. x0 + x1 + x2 = 1, x >= 0.
  ConeProgram prog;
  prog.add_block(ConeKind::Nonneg, 3);
  prog.add_row({{0, 1.0}, {1, 1.0}, {2, 1.0}}, 1.0);
  prog.set_objective(0, 1.0);
  prog.set_objective(1, 2.0);
  const ConeSolution sol = solve(prog);
  expect_consistent(prog, sol, 1e-7);
  EXPECT_NEAR(sol.objective, 2.0, 1e-6);
  EXPECT_NEAR(sol.x[1], 1.0, 1e-5);
}

TEST(Solve, FreeAndZeroBlocks) {
  // max -f  s.t. f - z = 1 - 3, z == 0  ->  f = -2, objective 2.
  ConeProgram prog;
  prog.add_block(ConeKind::Free, 1);
  prog.add_block(ConeKind::Zero, 1);
  prog.add_row({{0, 1.0}, {1, -1.0}}, -2.0);
  prog.set_objective(0, -1.0);
  const ConeSolution sol = solve(prog);
  expect_consistent(prog, sol, 1e-7);
  EXPECT_NEAR(sol.objective, 2.0, 1e-6);
}

TEST(Solve, IterationLimitIsReported) {
  SplitMix64 rng(1);
  const ConeProgram prog = trace_program(random_symmetric(6, -1, 1, rng), false);
  SolverSettings s;
  s.max_iter = 3;
  const ConeSolution sol = solve(prog, s);
  EXPECT_EQ(sol.status, SolveStatus::IterLimit);
  EXPECT_EQ(sol.iterations, 3);
}

TEST(Solve, InvalidSettingsRejected) {
  const ConeProgram prog = trace_program(SymMat::identity(2), false);
  SolverSettings s;
  s.tol = 0.0;
  EXPECT_THROW(solve(prog, s), InputError);
  s.tol = 1e-7;
  s.max_iter = 0;
  EXPECT_THROW(solve(prog, s), InputError);
}

TEST(Solve, RandomTraceSdpsMatchEigenvalues) {
  SplitMix64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const int m = 1 + static_cast<int>(rng.next() % 8);
    const SymMat c = random_symmetric(m, -1, 1, rng);
    const double lmax = testing::max_eig(c.dense());

    const ConeProgram eq = trace_program(c, false);
    const ConeSolution se = solve(eq);
    expect_consistent(eq, se, 1e-7);
    EXPECT_NEAR(se.objective, lmax, 1e-5);

    const ConeProgram le = trace_program(c, true);
    const ConeSolution sl = solve(le);
    expect_consistent(le, sl, 1e-7);
    EXPECT_NEAR(sl.objective, std::max(lmax, 0.0), 1e-5);
  }
}

TEST(Solve, ObjectiveScalesLinearly) {
  SplitMix64 rng(12);
  const SymMat c = random_symmetric(5, -1, 1, rng);
  const double base = solve(trace_program(c, true)).objective;
  for (double alpha : {0.01, 3.0, 250.0}) {
    const ConeSolution sol = solve(trace_program(alpha * c, true));
    ASSERT_EQ(sol.status, SolveStatus::Optimal);
    EXPECT_NEAR(sol.objective, alpha * base, 1e-5 * (1.0 + alpha * std::abs(base)));
  }
}

TEST(Solve, DualSlackLiesInDualCone) {
  SplitMix64 rng(13);
  const ConeProgram prog = trace_program(random_symmetric(4, -1, 1, rng), true);
  const ConeSolution sol = solve(prog);
  ASSERT_EQ(sol.status, SolveStatus::Optimal);
  // PSD and nonnegative cones are self-dual.
  EXPECT_LE(cone_violation(prog, sol.dual_slack), 1e-9);
}

TEST(ConeViolation, DetectsEachKind) {
  ConeProgram prog;
  prog.add_psd_block(2);
  prog.add_block(ConeKind::Nonneg, 1);
  prog.add_block(ConeKind::Zero, 1);
  std::vector<double> x{1.0, 0.0, 1.0, 0.0, 0.0};
  EXPECT_EQ(cone_violation(prog, x), 0.0);
  x[3] = -0.5;
  EXPECT_NEAR(cone_violation(prog, x), 0.5, 1e-15);
  x[3] = 0.0;
  x[4] = 0.25;
  EXPECT_NEAR(cone_violation(prog, x), 0.25, 1e-15);
  x[4] = 0.0;
  x[0] = -1.0;  // diag(-1, 1)
  EXPECT_GT(cone_violation(prog, x), 0.1);
}

}  // namespace
}  // namespace l1sdp::conic
