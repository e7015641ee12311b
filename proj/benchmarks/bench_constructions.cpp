#include <benchmark/benchmark.h>

#include "polyban/colimits.hpp"
#include "polyban/injectivity.hpp"
#include "polyban/purity.hpp"

using namespace polyban;

namespace {

LinearMap hyperplane() {
  const std::vector<RatVec> basis{{1, -1, 0}, {0, 1, -1}};
  const auto L = PolyhedralSpace::ell_infinity(3);
  return LinearMap(induced_subspace(L, basis), L, Matrix::from_columns(basis, 3));
}

void BM_IsometryDefect(benchmark::State& state) {
  const auto A = PolyhedralSpace::ell_one(3);
  const auto B = PolyhedralSpace::ell_infinity(3);
  const Matrix m = Matrix::from_rows({{1, 1, 0}, {0, 1, -1}, {1, 0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(isometry_defect(LinearMap(A, B, m)));
}

void BM_EpsPushout(benchmark::State& state) {
  const Rational eps(state.range(0), 4);
  const LinearMap f = hyperplane();
  const LinearMap g(f.domain(), PolyhedralSpace::ell_one(1), Matrix::from_rows({{Rational(1, 2), Rational(-1, 2)}}));
  for (auto _ : state) benchmark::DoNotOptimize(eps_pushout(f, g, eps));
}

void BM_IdealDefect(benchmark::State& state) {
  const Embedding e(hyperplane());
  for (auto _ : state) benchmark::DoNotOptimize(ideal_defect(e));
}

void BM_InjectivityDefect(benchmark::State& state) {
  const LinearMap h = hyperplane();
  for (auto _ : state) benchmark::DoNotOptimize(injectivity_defect(h, h.domain()));
}

void BM_GurariiBuild(benchmark::State& state) {
  MorphismCatalog c;
  const auto R = PolyhedralSpace::real_line();
  c.add("e1", LinearMap(R, PolyhedralSpace::ell_infinity(2), Matrix::from_rows({{1}, {0}})));
  c.add("diagonal", LinearMap(R, PolyhedralSpace::ell_infinity(2), Matrix::from_rows({{1}, {1}})));
  const GurariiOptions opts{static_cast<std::size_t>(state.range(0)), 2, kDefaultDimensionCap};
  for (auto _ : state) benchmark::DoNotOptimize(gurarii_build(R, c, opts));
}

}  // namespace

BENCHMARK(BM_IsometryDefect);
BENCHMARK(BM_EpsPushout)->Arg(0)->Arg(1)->Arg(4);
BENCHMARK(BM_IdealDefect);
BENCHMARK(BM_InjectivityDefect)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GurariiBuild)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
