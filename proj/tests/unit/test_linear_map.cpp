#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "polyban/errors.hpp"
#include "polyban/linear_map.hpp"

using namespace polyban;

namespace {

const PolyhedralSpace R = PolyhedralSpace::real_line();

LinearMap scalar(const Rational& s) { return LinearMap(R, R, Matrix::from_rows({{s}})); }

}  // namespace

TEST(LinearMap, ShapeIsValidated) {
  try {
    LinearMap(R, PolyhedralSpace::ell_one(2), Matrix::identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(LinearMap, OperatorNormExamples) {
  EXPECT_EQ(LinearMap::identity(PolyhedralSpace::ell_one(3)).operator_norm(), Rational(1));
  EXPECT_EQ(scalar(2).operator_norm(), Rational(2));
  const LinearMap id12(PolyhedralSpace::ell_one(2), PolyhedralSpace::ell_infinity(2), Matrix::identity(2));
  EXPECT_EQ(id12.operator_norm(), Rational(1));
  EXPECT_EQ(operator_norm(id12), testkit::operator_norm_by_facets(id12));
}

TEST(LinearMap, IsometryDefectExamples) {
  EXPECT_TRUE(LinearMap::identity(PolyhedralSpace::ell_infinity(2)).isometry_defect().is_isometry());
  const IsometryDefect half = scalar(Rational(1, 2)).isometry_defect();
  EXPECT_EQ(half.upper, Rational(0));
  EXPECT_EQ(half.lower, Rational(1, 2));
  EXPECT_TRUE(half.is_eps_isometry(Rational(1, 2)));
  EXPECT_FALSE(half.is_eps_isometry(Rational(1, 3)));
  const LinearMap into(R, PolyhedralSpace::ell_infinity(2), Matrix::from_rows({{1}, {0}}));
  EXPECT_TRUE(into.isometry_defect().is_isometry());
  // ℓ1² → ℓ∞² identity shrinks (1,1) to norm 1/2 of its ℓ1 norm.
  const LinearMap id12(PolyhedralSpace::ell_one(2), PolyhedralSpace::ell_infinity(2), Matrix::identity(2));
  EXPECT_EQ(id12.isometry_defect(), (IsometryDefect{0, Rational(1, 2)}));
}

TEST(LinearMap, ZeroSpaces) {
  const auto Z = PolyhedralSpace::zero();
  EXPECT_EQ(LinearMap::zero(Z, R).isometry_defect(), (IsometryDefect{0, 0}));
  EXPECT_EQ(LinearMap::zero(R, Z).isometry_defect(), (IsometryDefect{0, 1}));
  EXPECT_EQ(LinearMap::zero(R, Z).operator_norm(), Rational(0));
}

TEST(LinearMap, CompositionExamples) {
  const LinearMap half = scalar(Rational(1, 2));
  const LinearMap quarter = compose(half, half);
  EXPECT_EQ(quarter.isometry_defect().lower, Rational(3, 4));
  EXPECT_LE(quarter.isometry_defect().max(), half.isometry_defect().max() + half.isometry_defect().max());
  testkit::Generator gen(3);
  const auto A = gen.space(2), B = gen.space(2);
  const LinearMap f = gen.contraction(A, B);
  EXPECT_EQ(compose(LinearMap::identity(B), f), f);
  try {
    compose(f, f);
    if (!(A == B)) FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(LinearMap, TensorMapExamples) {
  testkit::Generator gen(4);
  const auto A = gen.space(2), B = gen.space(2);
  const LinearMap f = gen.contraction(A, B);
  const LinearMap t = tensor_map(R, f);
  EXPECT_EQ(t.matrix(), f.matrix());
  EXPECT_EQ(t.domain(), A);
  EXPECT_EQ(tensor_map(PolyhedralSpace::ell_one(2), LinearMap::identity(B)).operator_norm(), Rational(1));
  try {
    tensor_map(PolyhedralSpace::ell_one(3), LinearMap::identity(PolyhedralSpace::ell_one(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionCapExceeded);
  }
}

// Exact lower defect: per-facet epigraph programs against the per-region
// programs, plus probe points that can only bound the minimum from above.
TEST(LinearMap, LowerDefectMatchesRegionMethod) {
  testkit::Generator gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto A = gen.space(1 + gen.index(3));
    const auto B = gen.space(1 + gen.index(3));
    const LinearMap f(A, B, gen.matrix(B.dim(), A.dim()));
    const Rational m = min_sphere_norm(f);
    EXPECT_EQ(m, testkit::min_sphere_by_regions(f)) << "trial " << trial;
    for (const auto& v : A.vertices()) EXPECT_LE(m, B.norm(f.apply(v)));
    EXPECT_EQ(f.operator_norm(), testkit::operator_norm_by_facets(f));
  }
}

TEST(LinearMap, SubmultiplicativeNorm) {
  testkit::Generator gen(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto A = gen.space(1 + gen.index(3)), B = gen.space(1 + gen.index(3)), C = gen.space(1 + gen.index(3));
    const LinearMap f(A, B, gen.matrix(B.dim(), A.dim())), g(B, C, gen.matrix(C.dim(), B.dim()));
    EXPECT_LE(compose(g, f).operator_norm(), g.operator_norm() * f.operator_norm());
  }
}

// Small lower defect forces injectivity; defect arithmetic relates the weak
// and strong notions.
TEST(LinearMap, DefectImplications) {
  testkit::Generator gen(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto A = gen.space(1 + gen.index(2)), B = gen.space(1 + gen.index(3));
    const LinearMap f = gen.contraction(A, B);
    const IsometryDefect d = f.isometry_defect();
    if (d.lower < Rational(1)) EXPECT_EQ(rank(f.matrix()), A.dim());
    const Rational eps = d.max();
    // strong eps ⇒ weak eps
    if (d.is_strong_eps_isometry(eps)) EXPECT_TRUE(d.is_eps_isometry(eps));
    // weak eps with eps < 1 ⇒ strong eps/(1−eps)
    if (eps < Rational(1)) EXPECT_TRUE(d.is_strong_eps_isometry(eps / (Rational(1) - eps)));
  }
}

TEST(LinearMap, CacheIsSharedAcrossCopies) {
  const LinearMap f = scalar(3);
  const LinearMap g = f;
  EXPECT_EQ(&f.operator_norm(), &g.operator_norm());
  EXPECT_EQ(g.operator_norm(), Rational(3));
}
