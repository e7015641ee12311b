#include <benchmark/benchmark.h>

#include "polyban/lp.hpp"

using namespace polyban;

namespace {

// max Σ x_i subject to Σ_j ((i + j) mod 3 + 1) x_j <= n + i and x >= 0.
LinearProgram dense_program(std::size_t n) {
  LinearProgram lp(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rational(static_cast<long>((i + j) % 3 + 1));
    lp.add_constraint(row, Relation::LessEqual, Rational(static_cast<long>(n + i)));
    lp.add_lower_bound(i, Rational(0));
  }
  lp.set_objective(RatVec(n, Rational(1)), Sense::Maximize);
  return lp;
}

void BM_SolveDense(benchmark::State& state) {
  const LinearProgram lp = dense_program(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lp_solve(lp));
}

}  // namespace

BENCHMARK(BM_SolveDense)->DenseRange(2, 12, 2);
BENCHMARK_MAIN();
