#include <benchmark/benchmark.h>

#include <string>

#include "dsg/groebner.hpp"
#include "dsg/invariants.hpp"
#include "dsg/pipeline.hpp"
#include "dsg/resolution.hpp"
#include "dsg/ringfile.hpp"

namespace {

const char* const kRings[] = {"dim41.ring", "egdimsing1.ring", "uncountable.ring", "dual.ring", "depthzero5.ring"};

dsg::RingPtr load(std::int64_t i) { return dsg::load_ring_file(std::string(DSG_DATA_DIR) + "/" + kRings[i]).ring; }

void BM_JacobianBasis(benchmark::State& state) {
  auto R = load(state.range(0));
  auto gens = dsg::jacobian_ideal(R).ideal.lifted().generators();
  for (auto _ : state) benchmark::DoNotOptimize(dsg::reduced_groebner(R->ambient(), gens));
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_JacobianBasis)->DenseRange(0, 4);

void BM_GradeKoszul(benchmark::State& state) {
  auto R = load(state.range(0));
  auto I = dsg::jacobian_ideal(R).ideal;
  for (auto _ : state) benchmark::DoNotOptimize(dsg::grade_koszul(I));
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_GradeKoszul)->DenseRange(0, 3);

void BM_GradeExt(benchmark::State& state) {
  auto R = load(state.range(0));
  auto I = dsg::jacobian_ideal(R).ideal;
  const int n = static_cast<int>(R->nvars());
  for (auto _ : state) benchmark::DoNotOptimize(dsg::grade_ext_oracle(I, n));
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_GradeExt)->DenseRange(0, 3);

void BM_ResolveRing(benchmark::State& state) {
  auto R = load(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dsg::resolve_ring(*R));
  state.SetLabel(kRings[state.range(0)]);
}
BENCHMARK(BM_ResolveRing)->DenseRange(0, 4);

void BM_FullBound(benchmark::State& state) {
  auto R = load(0);
  dsg::PipelineOptions o;
  o.attest.half_cm_local = true;
  for (auto _ : state) benchmark::DoNotOptimize(dsg::compute_bound(R, o));
}
BENCHMARK(BM_FullBound);

}  // namespace
BENCHMARK_MAIN();
