// Serial against OpenMP kernels: action-matrix assembly plus elimination,
// and elimination alone on random sparse systems.

#include <benchmark/benchmark.h>

#include <random>

#include "uea/catalog.hpp"
#include "uea/center.hpp"
#include "uea/sparse_matrix.hpp"

using namespace uea;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_CenterKernel(benchmark::State& state, const char* key, std::uint32_t p, int xdeg, int filt) {
  const Envelope env{CurrentAlgebra{catalog_get(key, p), Variant::Current}};
  const auto w = GradedWindow::current(xdeg, filt);
  std::size_t dim = 0;
  for (auto _ : state) {
    auto k = center_kernel(w, xdeg + 1, env, exec_of(state));
    dim = k.size();
    benchmark::DoNotOptimize(k);
  }
  state.counters["basis"] = static_cast<double>(enumerate_pbw_basis(w, env.algebra()).size());
  state.counters["kernel"] = static_cast<double>(dim);
  state.counters["threads"] = exec_of(state) == Exec::Parallel ? max_threads() : 1;
}

void BM_InvariantKernel(benchmark::State& state, const char* key, std::uint32_t p, int xdeg, int filt) {
  const SymAlgebra sym{CurrentAlgebra{catalog_get(key, p), Variant::Current}};
  const auto w = GradedWindow::current(xdeg, filt);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_kernel(w, xdeg + 1, sym, exec_of(state)));
}

void BM_Elimination(benchmark::State& state, std::uint32_t p) {
  const Field f = Field::of_characteristic(p);
  const auto n = static_cast<std::size_t>(state.range(1));
  std::mt19937 rng(7);
  std::bernoulli_distribution keep(0.05);
  std::uniform_int_distribution<long> val(-5, 5);
  SparseMatrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(rng)) m.set(r, c, Scalar{f, val(rng)});
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m, exec_of(state)));
}

}  // namespace

BENCHMARK_CAPTURE(BM_CenterKernel, sl2_p3, "sl2", 3, 2, 6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CenterKernel, gl11_q, "gl11", 0, 2, 5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CenterKernel, osp12_p3, "osp12", 3, 1, 5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_InvariantKernel, sl2_q, "sl2", 0, 2, 6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Elimination, q, 0)->Args({0, 200})->Args({1, 200})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Elimination, gf101, 101)->Args({0, 400})->Args({1, 400})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
