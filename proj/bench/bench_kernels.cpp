#include <benchmark/benchmark.h>

#include "gerbes/sweep.hpp"

namespace {

using namespace gerbes;

GerbeData bench_gerbe() {
  AltForm3 E(4);
  E.add_term(0, 1, 2, 4);
  E.add_term(0, 1, 3, 4);
  return GerbeData::make(Torus::standard(2), AltForm2(4), E);
}

std::vector<QVector> bench_generators() {
  std::vector<QVector> g;
  for (std::size_t i = 0; i < 4; ++i) {
    g.push_back(basis_vector(4, i, Rational(1, 2)));
    g.push_back(basis_vector(4, i, Rational(1, 4)));
  }
  g.push_back(g[0] + g[3]);
  g.push_back(g[2] + g[5]);
  return g;
}

void BM_TauChecks(benchmark::State& state, bool parallel) {
  const TauContext ctx = TauContext::make(bench_gerbe(), basis_vector(4, 0, Rational(1, 4)), SubgroupCase::Integral);
  const auto samples = default_tau_samples(4, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto out = parallel ? kernels::tau_checks_parallel(ctx, samples) : kernels::tau_checks_serial(ctx, samples);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(samples.size()));
}

void BM_SecondTable(benchmark::State& state, bool parallel) {
  const ObstructionContext ctx(bench_gerbe(), SubgroupCase::Integral);
  const auto gens = bench_generators();
  for (auto _ : state) {
    auto out = parallel ? kernels::second_obstruction_table_parallel(ctx, gens)
                        : kernels::second_obstruction_table_serial(ctx, gens);
    benchmark::DoNotOptimize(out);
  }
}

void BM_FirstTable(benchmark::State& state, bool parallel) {
  const ObstructionContext ctx(bench_gerbe(), SubgroupCase::Integral);
  const auto gens = bench_generators();
  for (auto _ : state) {
    auto out = parallel ? kernels::first_obstruction_table_parallel(ctx, gens)
                        : kernels::first_obstruction_table_serial(ctx, gens);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_TauChecks, serial, false)->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(BM_TauChecks, parallel, true)->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(BM_FirstTable, serial, false);
BENCHMARK_CAPTURE(BM_FirstTable, parallel, true);
BENCHMARK_CAPTURE(BM_SecondTable, serial, false);
BENCHMARK_CAPTURE(BM_SecondTable, parallel, true);

BENCHMARK_MAIN();
