#include <benchmark/benchmark.h>

#include "ternary/arith.hpp"
#include "ternary/legendre.hpp"
#include "ternary/oracle.hpp"
#include "ternary/residues.hpp"
#include "ternary/two_squares.hpp"

using namespace ternary;

namespace {

void BM_SolveNormalWorked(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_normal({17, 13}));
}
BENCHMARK(BM_SolveNormalWorked);

// Equal coefficients p == 1 (mod 4): a single two-squares descent at the base.
void BM_SolveNormalLargePrime(benchmark::State& state) {
  const Integer p("1000000000000000009");
  for (auto _ : state) benchmark::DoNotOptimize(solve_normal({p, p}));
}
BENCHMARK(BM_SolveNormalLargePrime);

void BM_SolveNormalSweep(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    for (long long a = 1; a <= n; ++a) {
      if (!is_squarefree(a)) continue;
      for (long long b = 1; b <= n; ++b) {
        if (is_squarefree(b)) benchmark::DoNotOptimize(solve_normal({a, b}));
      }
    }
  }
}
BENCHMARK(BM_SolveNormalSweep)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SolveGeneral(benchmark::State& state) {
  const GeneralEquation eq{Integer("999999999989"), 7, Integer("-999999999959")};
  for (auto _ : state) benchmark::DoNotOptimize(solve_general(eq));
}
BENCHMARK(BM_SolveGeneral)->Unit(benchmark::kMillisecond);

void BM_PrimeTwoSquares(benchmark::State& state) {
  const Integer p("1000000000000000009");
  const Integer root = *sqrt_mod_prime(-1, p);
  for (auto _ : state) benchmark::DoNotOptimize(prime_two_squares(p, root));
}
BENCHMARK(BM_PrimeTwoSquares);

void BM_SqrtModPrime(benchmark::State& state) {
  const Integer p("1000000000000000009");
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_mod_prime(-1, p));
}
BENCHMARK(BM_SqrtModPrime);

void BM_Factorize(benchmark::State& state) {
  const Integer n = Integer("999999999989") * Integer("1000000000039");
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize)->Unit(benchmark::kMillisecond);

// Worst case for the oracle: an unsolvable pair scans the whole box.
void BM_OracleNormalUnsolvable(benchmark::State& state) {
  const Integer limit = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_normal(2, 3, limit));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleNormalUnsolvable)
    ->RangeMultiplier(10)
    ->Range(100, 10'000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
