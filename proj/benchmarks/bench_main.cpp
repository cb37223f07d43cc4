#include <benchmark/benchmark.h>

#include "skyring/chow_ring.hpp"
#include "skyring/isomorphism.hpp"
#include "skyring/oracle.hpp"
#include "skyring/presentation.hpp"
#include "skyring/sequence.hpp"

using namespace skyring;

namespace {

// Alternating ambient curves and points, each curve meeting the previous one.
BlowUpSequence chain(int s) {
  BlowUpSequence seq;
  for (int a = 1; a <= s; ++a) {
    if (a % 2 == 0) {
      seq.centers.push_back({a, CenterKind::point, AmbientPoint{}});
      continue;
    }
    AmbientCurve c;
    c.degree = a + 2;
    if (a > 2) c.meets.push_back({a - 2, 1});
    seq.centers.push_back({a, CenterKind::curve, c});
  }
  return seq;
}

BlowUpSequence point_then_curve() {
  AmbientCurve c;
  c.degree = 4;
  c.meets.push_back({1, 1});
  BlowUpSequence seq;
  seq.centers = {{1, CenterKind::point, AmbientPoint{}}, {2, CenterKind::curve, c}};
  return seq;
}

BlowUpSequence curve_then_fiber() {
  AmbientCurve c;
  c.degree = 4;
  BlowUpSequence seq;
  seq.centers = {{1, CenterKind::curve, c}, {2, CenterKind::curve, ExceptionalFiber{1}}};
  return seq;
}

void BM_BuildRing(benchmark::State& state) {
  const BlowUpSequence seq = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_ring(lower(seq)));
}
BENCHMARK(BM_BuildRing)->DenseRange(2, 8, 2);

void BM_Multiply(benchmark::State& state) {
  const ChowRing r = build_ring(lower(chain(static_cast<int>(state.range(0)))));
  ClassVector x = r.h();
  for (int a = 1; a <= r.num_centers(); ++a) x += r.e(a);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(r, x, x));
}
BENCHMARK(BM_Multiply)->DenseRange(2, 8, 2);

void BM_Presentation(benchmark::State& state) {
  const auto irs = lower(chain(static_cast<int>(state.range(0))));
  const ChowRing r = build_ring(irs);
  for (auto _ : state)
    benchmark::DoNotOptimize(emit_presentation(r, irs, PresentationFormat::text));
}
BENCHMARK(BM_Presentation)->DenseRange(2, 8, 2);

void BM_Associativity(benchmark::State& state) {
  const ChowRing r = build_ring(lower(chain(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_associativity(r));
}
BENCHMARK(BM_Associativity)->DenseRange(2, 8, 2);

void BM_Search(benchmark::State& state) {
  const ChowRing z = build_ring(lower(point_then_curve()));
  const ChowRing zp = build_ring(lower(curve_then_fiber()));
  SearchConfig cfg;
  cfg.bound = static_cast<Int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_isomorphisms(z, zp, cfg));
}
BENCHMARK(BM_Search)->DenseRange(1, 3, 1)->Unit(benchmark::kMillisecond);

void BM_OracleSearch(benchmark::State& state) {
  const ChowRing z = build_ring(lower(point_then_curve()));
  const ChowRing zp = build_ring(lower(curve_then_fiber()));
  for (auto _ : state) benchmark::DoNotOptimize(iso_bruteforce(z, zp, state.range(0)));
}
BENCHMARK(BM_OracleSearch)->DenseRange(1, 2, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
