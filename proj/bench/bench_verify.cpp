#include <benchmark/benchmark.h>

#include "codegree/cyclotomic.hpp"
#include "codegree/verifier.hpp"

using namespace codegree;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_LemmaP1(benchmark::State& state) {
  const GridConfig cfg;
  const auto& catalog = Catalog::bundled();
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_p1(cfg, catalog, mode(state)));
}
BENCHMARK(BM_LemmaP1)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_TheoremCases(benchmark::State& state) {
  GridConfig cfg;
  cfg.q_max = 1000;
  cfg.m_max = 16;
  const auto& catalog = Catalog::bundled();
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_cases(cfg, catalog, mode(state)));
}
BENCHMARK(BM_TheoremCases)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_SimpleG(benchmark::State& state) {
  GridConfig cfg;
  cfg.q_max = 1000;
  cfg.m_max = 16;
  const auto& catalog = Catalog::bundled();
  for (auto _ : state) benchmark::DoNotOptimize(verify_simple_g_cases(cfg, catalog, mode(state)));
}
BENCHMARK(BM_SimpleG)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_ProductIdentity(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto ok = evaluate_points<char>(
        n_max, [](std::size_t i) { return static_cast<char>(product_identity_check(static_cast<unsigned>(i + 1))); },
        state.range(1) ? Execution::parallel : Execution::serial);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_ProductIdentity)->Args({300, 0})->Args({300, 1})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
