// Serial reference vs OpenMP path for the main kernels. Arg 0 = serial, 1 = parallel.

#include "srg/complex.hpp"
#include "srg/lambda.hpp"
#include "srg/wick.hpp"

#include <benchmark/benchmark.h>

using namespace srg;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

const std::vector<StableRibbonGraph>& graphs() {
  static const auto g = [] {
    std::vector<StableRibbonGraph> out;
    for (int e = 1; e <= 4; ++e) {
      EnumerationOptions o;
      o.edges = e;
      o.connected = false;
      for (const auto& c : enumerate(o)) out.push_back(decode(c));
    }
    return out;
  }();
  return g;
}

const GraphChain& big_chain() {
  static const auto c = [] {
    GraphChain out;
    int k = 1;
    for (const auto& g : graphs()) add_graph(out, g, Rational(k++ % 5 + 1));
    return out;
  }();
  return c;
}

const CEChain& spanning_chain() {
  static const auto c = [] {
    CEChain out;
    int k = 1;
    for (const auto& t : lambda_spanning_set(SymplecticSpace{2}, 2, 5)) out.add(t, Rational(k++ % 7 + 1));
    return out;
  }();
  return c;
}

void BM_Enumerate(benchmark::State& s) {
  EnumerationOptions o;
  o.edges = 4;
  o.connected = false;
  o.execution = mode(s);
  for (auto _ : s) benchmark::DoNotOptimize(enumerate(o));
}

void BM_CanonicalBatch(benchmark::State& s) {
  const auto& gs = graphs();
  for (auto _ : s) benchmark::DoNotOptimize(canonical_forms(gs, mode(s)));
  s.SetItemsProcessed(static_cast<long>(s.iterations() * gs.size()));
}

void BM_Boundary(benchmark::State& s) {
  const auto& c = big_chain();
  for (auto _ : s) benchmark::DoNotOptimize(boundary(c, mode(s)));
}

void BM_DeformedDifferentialSquared(benchmark::State& s) {
  const auto& c = spanning_chain();
  for (auto _ : s) benchmark::DoNotOptimize(deformed_differential(deformed_differential(c, mode(s)), mode(s)));
}

void BM_WickRoundTrip(benchmark::State& s) {
  TensorChain all;
  for (const auto& g : graphs())
    if (g.edge_count() <= 3) all.add(x_gamma(g));
  for (auto _ : s) benchmark::DoNotOptimize(wick_map(all, mode(s)));
}

void BM_Homology(benchmark::State& s) {
  for (auto _ : s) {
    auto slice = build_slice(ComplexKind::srgc, std::nullopt, true, 4, mode(s));
    benchmark::DoNotOptimize(homology_ranks(slice, RankMethod::sparse, mode(s)));
  }
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Boundary)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeformedDifferentialSquared)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WickRoundTrip)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Homology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  init_threads_from_env();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
}
