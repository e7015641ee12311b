#include <benchmark/benchmark.h>

#include "polyban/space.hpp"

using namespace polyban;

namespace {

void BM_CubeFromFacets(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<RatVec> facets;
  for (std::size_t i = 0; i < n; ++i)
    for (long s : {1L, -1L}) {
      RatVec f(n, Rational(0));
      f[i] = s;
      facets.push_back(f);
    }
  for (auto _ : state) benchmark::DoNotOptimize(PolyhedralSpace::from_facets(facets, n));
}

void BM_CrossPolytopeFromVertices(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<RatVec> vertices;
  for (std::size_t i = 0; i < n; ++i)
    for (long s : {1L, -1L}) {
      RatVec v(n, Rational(0));
      v[i] = s;
      vertices.push_back(v);
    }
  for (auto _ : state) benchmark::DoNotOptimize(PolyhedralSpace::from_vertices(vertices, n));
}

void BM_ProjectiveTensor(benchmark::State& state) {
  const auto K = PolyhedralSpace::ell_one(2);
  const auto L = PolyhedralSpace::ell_infinity(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(projective_tensor(K, L));
}

}  // namespace

BENCHMARK(BM_CubeFromFacets)->DenseRange(2, 6);
BENCHMARK(BM_CrossPolytopeFromVertices)->DenseRange(2, 6);
BENCHMARK(BM_ProjectiveTensor)->DenseRange(1, 3);
