// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick instances.
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tough/connectivity.hpp"
#include "tough/family_spec.hpp"
#include "tough/toughness.hpp"

using namespace tough;

namespace {

const std::vector<std::string>& instances() {
  static const std::vector<std::string> s = {"lattice:v=5", "complement(point-graph(gq24))",
                                             "complement(point-graph(gq-w:q=3))", "kneser:v=7,r=2"};
  return s;
}

const Graph& instance(std::int64_t i) {
  static std::vector<Graph> graphs = [] {
    std::vector<Graph> out;
    for (const auto& s : instances()) out.push_back(build_family(s));
    return out;
  }();
  return graphs[static_cast<std::size_t>(i)];
}

// The GQ(3,3) complement is searched over c >= 3 only; the c = 2 case is kappa/2.
ToughnessOptions options_for(std::int64_t i) {
  ToughnessOptions o;
  if (instances()[static_cast<std::size_t>(i)].find("gq-w:q=3") != std::string::npos) o.min_components = 3;
  return o;
}

void toughness_serial(benchmark::State& st) {
  const Graph& g = instance(st.range(0));
  const ToughnessOptions o = options_for(st.range(0));
  st.SetLabel(instances()[static_cast<std::size_t>(st.range(0))]);
  for (auto _ : st) benchmark::DoNotOptimize(toughness_exact_serial(g, o));
}

void toughness_parallel(benchmark::State& st) {
  const Graph& g = instance(st.range(0));
  ToughnessOptions o = options_for(st.range(0));
  o.threads = static_cast<unsigned>(st.range(1));
  st.SetLabel(instances()[static_cast<std::size_t>(st.range(0))]);
  for (auto _ : st) benchmark::DoNotOptimize(toughness_exact(g, o));
}

void kappa_serial(benchmark::State& st) {
  const Graph& g = instance(st.range(0));
  st.SetLabel(instances()[static_cast<std::size_t>(st.range(0))]);
  for (auto _ : st) benchmark::DoNotOptimize(vertex_connectivity_serial(g));
}

void kappa_parallel(benchmark::State& st) {
  const Graph& g = instance(st.range(0));
  st.SetLabel(instances()[static_cast<std::size_t>(st.range(0))]);
  for (auto _ : st) benchmark::DoNotOptimize(vertex_connectivity(g, static_cast<unsigned>(st.range(1))));
}

}  // namespace

BENCHMARK(toughness_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(toughness_parallel)->ArgsProduct({{0, 1, 2, 3}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(kappa_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(kappa_parallel)->ArgsProduct({{0, 1, 2, 3}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
