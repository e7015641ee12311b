#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "polyban/errors.hpp"
#include "polyban/lp.hpp"

using namespace polyban;

TEST(LinearProgram, SingleBindingConstraint) {
  LinearProgram lp(1);
  lp.set_objective({1}, Sense::Minimize);
  lp.add_constraint({1}, Relation::GreaterEqual, 3);
  const LPResult r = lp_solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.optimum, Rational(3));
  EXPECT_EQ(r.witness, (RatVec{3}));
}

TEST(LinearProgram, TighterBoundWins) {
  LinearProgram lp(1);
  lp.set_objective({1}, Sense::Maximize);
  lp.add_constraint({1}, Relation::LessEqual, 1);
  lp.add_constraint({1}, Relation::LessEqual, Rational(1, 2));
  const LPResult r = lp_solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.optimum, Rational(1, 2));
}

TEST(LinearProgram, ContradictoryBoundsAreInfeasible) {
  LinearProgram lp(1);
  lp.set_objective({0}, Sense::Minimize);
  lp.add_constraint({1}, Relation::LessEqual, -1);
  lp.add_constraint({1}, Relation::GreaterEqual, 1);
  EXPECT_EQ(lp_solve(lp).status, LPStatus::Infeasible);
}

TEST(LinearProgram, UnboundedDirection) {
  LinearProgram lp(2);
  lp.set_objective({1, 1}, Sense::Maximize);
  lp.add_constraint({1, -1}, Relation::LessEqual, 1);
  lp.add_lower_bound(0, 0);
  lp.add_lower_bound(1, 0);
  EXPECT_EQ(lp_solve(lp).status, LPStatus::Unbounded);
}

TEST(LinearProgram, EqualityAndFreeVariables) {
  LinearProgram lp(3);
  lp.set_objective({1, 2, -1}, Sense::Minimize);
  lp.add_constraint({1, 1, 1}, Relation::Equal, 1);
  for (std::size_t i = 0; i < 3; ++i) lp.add_lower_bound(i, 0);
  const LPResult r = lp_solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.optimum, Rational(-1));
  EXPECT_EQ(r.witness, (RatVec{0, 0, 1}));
}

TEST(LinearProgram, RedundantEqualities) {
  LinearProgram lp(2);
  lp.set_objective({1, 0}, Sense::Maximize);
  lp.add_constraint({1, 1}, Relation::Equal, 2);
  lp.add_constraint({2, 2}, Relation::Equal, 4);
  lp.add_constraint({1, 0}, Relation::LessEqual, 5);
  lp.add_lower_bound(1, 0);
  const LPResult r = lp_solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.optimum, Rational(2));
}

TEST(LinearProgram, NoConstraintsNoVariables) {
  LinearProgram empty(0);
  const LPResult r = lp_solve(empty);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.optimum, Rational(0));
  LinearProgram free_min(1);
  free_min.set_objective({1}, Sense::Minimize);
  EXPECT_EQ(lp_solve(free_min).status, LPStatus::Unbounded);
}

TEST(LinearProgram, MalformedConstraintRejected) {
  LinearProgram lp(2);
  try {
    lp.add_constraint({1, 2, 3}, Relation::LessEqual, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedProgram);
  }
}

// Random bounded programs: witness feasibility is exact and the optimum
// agrees with enumeration of all basic solutions.
TEST(LinearProgram, MatchesBasicSolutionEnumeration) {
  testkit::Generator gen(2024);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + gen.index(3);
    LinearProgram lp(n);
    lp.set_objective(gen.vector(n), gen.coin() ? Sense::Minimize : Sense::Maximize);
    // A box keeps the program bounded.
    for (std::size_t i = 0; i < n; ++i) {
      lp.add_constraint(unit_vector(n, i), Relation::LessEqual, gen.integer(1, 4));
      lp.add_constraint(unit_vector(n, i), Relation::GreaterEqual, -gen.integer(0, 4));
    }
    const std::size_t extra = gen.index(4);
    for (std::size_t k = 0; k < extra; ++k) {
      const Relation rel = static_cast<Relation>(gen.index(3));
      lp.add_constraint(gen.vector(n), rel, gen.rational());
    }
    const LPResult r = lp_solve(lp);
    const auto expected = testkit::brute_force_lp(lp);
    if (!expected) {
      EXPECT_EQ(r.status, LPStatus::Infeasible) << "trial " << trial;
      ++infeasible;
      continue;
    }
    ASSERT_TRUE(r.optimal()) << "trial " << trial;
    EXPECT_EQ(r.optimum, *expected) << "trial " << trial;
    EXPECT_TRUE(lp_feasible_point(lp, r.witness));
    EXPECT_EQ(dot(lp.objective(), r.witness), r.optimum);
    ++optimal;
  }
  EXPECT_GT(optimal, 50);
}

// Strong duality: min c·x, Ax >= b, x >= 0 against max b·y, Aᵀy <= c, y >= 0.
TEST(LinearProgram, StrongDualityOnRandomPrograms) {
  testkit::Generator gen(7);
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + gen.index(3), m = 1 + gen.index(3);
    Matrix A = gen.matrix(m, n);
    RatVec b = gen.vector(m), c(n);
    for (auto& ci : c) ci = Rational(gen.integer(0, 4));
    LinearProgram primal(n), dual(m);
    primal.set_objective(c, Sense::Minimize);
    for (std::size_t i = 0; i < m; ++i) primal.add_constraint(A.row(i), Relation::GreaterEqual, b[i]);
    for (std::size_t j = 0; j < n; ++j) primal.add_lower_bound(j, 0);
    dual.set_objective(b, Sense::Maximize);
    for (std::size_t j = 0; j < n; ++j) dual.add_constraint(A.column(j), Relation::LessEqual, c[j]);
    for (std::size_t i = 0; i < m; ++i) dual.add_lower_bound(i, 0);
    const LPResult p = lp_solve(primal), d = lp_solve(dual);
    if (p.optimal()) {
      ASSERT_TRUE(d.optimal());
      EXPECT_EQ(p.optimum, d.optimum);
      ++compared;
    } else if (p.status == LPStatus::Infeasible) {
      EXPECT_NE(d.status, LPStatus::Optimal);
    } else {
      EXPECT_EQ(d.status, LPStatus::Infeasible);
    }
  }
  EXPECT_GT(compared, 20);
}

TEST(LinearProgram, DeterministicWitness) {
  LinearProgram lp(2);
  lp.set_objective({1, 1}, Sense::Maximize);
  lp.add_constraint({1, 1}, Relation::LessEqual, 1);
  lp.add_lower_bound(0, 0);
  lp.add_lower_bound(1, 0);
  const LPResult a = lp_solve(lp), b = lp_solve(lp);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.optimum, Rational(1));
}
