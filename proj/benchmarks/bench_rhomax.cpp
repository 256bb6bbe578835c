#include <benchmark/benchmark.h>

#include "rhomax/hodge.hpp"
#include "rhomax/pipeline.hpp"

using namespace rhomax;

namespace {

const std::vector<catalog::Entry>& entries() {
  static const auto e = catalog::load_catalog_file(catalog::default_catalog_path());
  return e;
}

const catalog::Entry& entry(const char* id) { return catalog::find_entry(entries(), id); }

void BM_CountPlane(benchmark::State& st) {
  const auto& m = *entry("C6").model;
  auto p = static_cast<std::uint64_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(curves::count_points(m, p));
}
BENCHMARK(BM_CountPlane)->Arg(31)->Arg(101)->Arg(199);

void BM_CountHyperelliptic(benchmark::State& st) {
  const auto& m = *entry("Ex1[t=0]").model;
  auto p = static_cast<std::uint64_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(curves::count_points(m, p));
}
BENCHMARK(BM_CountHyperelliptic)->Arg(101)->Arg(997);

void BM_CountSpace(benchmark::State& st) {
  const auto& m = *entry("C6/beta").model;
  auto p = static_cast<std::uint64_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(curves::count_points(m, p));
}
BENCHMARK(BM_CountSpace)->Arg(11)->Arg(101);

void BM_ExtensionCount(benchmark::State& st) {
  const auto& m = *entry("Ex4").model;
  for (auto _ : st) benchmark::DoNotOptimize(curves::count_points_ext(m, 31, 2));
}
BENCHMARK(BM_ExtensionCount);

void BM_TraceFeasibility(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(pipeline::trace_feasibility(8, {{-3, 10}}, 199));
}
BENCHMARK(BM_TraceFeasibility);

void BM_VerifyMap(benchmark::State& st) {
  const auto& e = entry("C6");
  const auto& decl = std::get<catalog::CurveMapDecl>(e.find_map("f")->body);
  const auto& target = e.targets.at(decl.target).curve;
  for (auto _ : st) benchmark::DoNotOptimize(morph::verify_map(*e.chart, target, decl.map));
}
BENCHMARK(BM_VerifyMap);

void BM_MiddleHodge(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hodge::middle_hodge(4, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_MiddleHodge)->Arg(6)->Arg(20);

void BM_RunEntry(benchmark::State& st) {
  pipeline::RunOptions opt;
  opt.pmax = 100;
  const auto& e = entry("Ex1[t=0]");
  for (auto _ : st) benchmark::DoNotOptimize(pipeline::run_entry(e, opt));
}
BENCHMARK(BM_RunEntry)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
