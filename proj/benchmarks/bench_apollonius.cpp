#include <benchmark/benchmark.h>

#include "apollonius/duality.hpp"
#include "apollonius/localindex.hpp"
#include "apollonius/pipeline.hpp"
#include "apollonius/solver.hpp"
#include "apollonius/zerodim.hpp"

using namespace apollo;

namespace {

Configuration generic(const FieldDescriptor& k = FieldDescriptor::rationals()) {
  return Configuration::over(k, {InputObject::circle(0, 0, 1), InputObject::circle(4, 0, 1), InputObject::circle(2, 3, 1)});
}

Configuration deficient_real() {
  auto q = [](const char* s) { return FieldElement(Scalar::parse(s)); };
  return Configuration::over(FieldDescriptor::rationals(), {InputObject::circle(q("0"), q("1/8"), q("49/64")),
                                                            InputObject::circle(q("5/4"), q("0"), q("1")),
                                                            InputObject::circle(q("1"), q("2"), q("1/4"))});
}

void BM_SolveGeneric(benchmark::State& state) {
  const Configuration cfg = generic();
  for (auto _ : state) benchmark::DoNotOptimize(solve_all(cfg));
}
BENCHMARK(BM_SolveGeneric);

void BM_SolveDeficientReal(benchmark::State& state) {
  const Configuration cfg = deficient_real();
  for (auto _ : state) benchmark::DoNotOptimize(solve_all(cfg));
}
BENCHMARK(BM_SolveDeficientReal);

void BM_PerPointSum(benchmark::State& state) {
  const Configuration cfg = deficient_real();
  const auto sols = solve_all(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(sum_over_closed_points(cfg, sols));
}
BENCHMARK(BM_PerPointSum);

void BM_AnalyzeGeneric(benchmark::State& state) {
  const Configuration cfg = generic();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(cfg));
}
BENCHMARK(BM_AnalyzeGeneric)->Unit(benchmark::kMillisecond);

void BM_AnalyzeFp(benchmark::State& state) {
  const Configuration cfg = generic(FieldDescriptor::prime_field(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(cfg));
}
BENCHMARK(BM_AnalyzeFp)->Arg(11)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Theta(benchmark::State& state) {
  const Configuration cfg = generic();
  const Radii radii = choose_radii(cfg);
  for (auto _ : state) {
    for (int i = 1; i <= 3; ++i) benchmark::DoNotOptimize(theta(cfg, radii, i));
  }
}
BENCHMARK(BM_Theta);

void BM_Enumerate(benchmark::State& state) {
  ProblemConfig pc;
  pc.objects = generic().objects;
  const std::int64_t p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_projective(pc, p));
  state.SetItemsProcessed(state.iterations() * (p * p * p + p * p + p + 1));
}
BENCHMARK(BM_Enumerate)->Arg(17)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  ProblemConfig pc;
  pc.objects = generic().objects;
  for (auto _ : state) benchmark::DoNotOptimize(cmd_sweep(pc, 3, 100, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
