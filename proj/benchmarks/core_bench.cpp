#include <benchmark/benchmark.h>

#include <random>

#include "toric/criteria.hpp"
#include "toric/fixtures.hpp"
#include "toric/jobs.hpp"

using namespace toric;

namespace {

IntVec v(std::initializer_list<long> xs) {
  IntVec out(xs.size());
  std::size_t i = 0;
  for (long x : xs) out[i++] = x;
  return out;
}

IntMat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

void BM_smith_normal_form(benchmark::State& state) {
  std::mt19937 rng(42);
  IntMat a = random_mat(rng, state.range(0), state.range(0), 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(6);

void BM_hilbert_basis_wedge(benchmark::State& state) {
  Cone c = Cone::from_rays(3, {v({1, 0, 0}), v({0, 1, 0}),
                               v({3, 5, -static_cast<long>(state.range(0))})});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(c));
}
BENCHMARK(BM_hilbert_basis_wedge)->Arg(7)->Arg(11);

void BM_ccr_elementary_flop(benchmark::State& state) {
  WallRelation w = json_to_wall(fixture_payload("danilov_flop"), "bench");
  FlipFans fans = flip_fans(w);
  Fan base = make_fan(3, {fans.sigma0});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        coarsest_common_refinement(fans.sigma_fan, fans.sigma_prime_fan, base));
}
BENCHMARK(BM_ccr_elementary_flop);

void BM_reduced_oracle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(reduced_oracle_3d(-3, -5, 7, state.range(0)));
}
BENCHMARK(BM_reduced_oracle)->Arg(20)->Arg(60);

void BM_diagnose_flop(benchmark::State& state) {
  WallRelation w = json_to_wall(fixture_payload("flop_3_5"), "bench");
  for (auto _ : state) benchmark::DoNotOptimize(diagnose(w));
}
BENCHMARK(BM_diagnose_flop);

}  // namespace

BENCHMARK_MAIN();
