#include <chromgf/algebra/linear_solve.hpp>
#include <chromgf/algebra/poly_zc.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace chromgf;

namespace {

PolyZC random_poly(std::mt19937& rng, int z_deg, int c_deg) {
  std::uniform_int_distribution<long> coef(-20, 20);
  std::vector<PolyC> by_z;
  for (int k = 0; k <= z_deg; ++k) {
    std::vector<Rat> cs;
    for (int j = 0; j <= c_deg; ++j) cs.emplace_back(coef(rng));
    by_z.emplace_back(std::move(cs));
  }
  return PolyZC(std::move(by_z));
}

}  // namespace

static void BM_BivarGcd(benchmark::State& state) {
  std::mt19937 rng(1);
  const int deg = static_cast<int>(state.range(0));
  const PolyZC g = random_poly(rng, deg / 2, deg);
  const PolyZC a = g * random_poly(rng, deg, deg);
  const PolyZC b = g * random_poly(rng, deg, deg);
  for (auto _ : state) benchmark::DoNotOptimize(bivar_gcd(a, b));
}
BENCHMARK(BM_BivarGcd)->RangeMultiplier(2)->Range(2, 8)->Unit(benchmark::kMillisecond);

static void BM_FractionFreeSolve(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix<PolyZC> a(n, n);
  std::vector<PolyZC> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = random_poly(rng, 1, 2);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_poly(rng, 1, 2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_fraction_free(a, b));
}
BENCHMARK(BM_FractionFreeSolve)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
