#include <benchmark/benchmark.h>

#include "surfpen/expr.hpp"
#include "surfpen/fixtures.hpp"
#include "surfpen/frames.hpp"
#include "surfpen/pencil.hpp"
#include "surfpen/verify.hpp"

using namespace surfpen;

static void BM_ExprEval(benchmark::State& state) {
  const Expr e = parse("exp(s)*t*cos(4*s/5) - s^2*t*tan(s/2)");
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.eval(s, 0.3));
    s += 1e-9;
  }
}
BENCHMARK(BM_ExprEval);

static void BM_ExprDifferentiate(benchmark::State& state) {
  const Expr e = parse("exp(s)*t*cos(4*s/5) - s^2*t*tan(s/2) + sqrt(1 + s^2)/ln(2 + t^2)");
  for (auto _ : state) benchmark::DoNotOptimize(differentiate(e, Var::s));
}
BENCHMARK(BM_ExprDifferentiate);

static void BM_RmfByTheta(benchmark::State& state) {
  const Curve c = fixtures::y_helix();
  for (auto _ : state) benchmark::DoNotOptimize(rmf_by_theta(c, 0.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RmfByTheta)->Arg(512)->Arg(2048);

static void BM_DoubleReflection(benchmark::State& state) {
  const Curve c = fixtures::y_helix();
  const Vec3 u0 = frenet(c, c.domain().lo).normal;
  for (auto _ : state) benchmark::DoNotOptimize(rmf_double_reflection(c, u0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DoubleReflection)->Arg(512)->Arg(2048);

static void BM_EvaluateGrid(benchmark::State& state) {
  const auto ex = fixtures::build_example("p4");
  for (auto _ : state) benchmark::DoNotOptimize(ex.patch().evaluate_grid());
}
BENCHMARK(BM_EvaluateGrid);

static void BM_CheckConditions(benchmark::State& state) {
  const auto ex = fixtures::build_example("p2");
  for (auto _ : state) benchmark::DoNotOptimize(check_conditions(ex.patch()));
}
BENCHMARK(BM_CheckConditions);

static void BM_FundamentalForms(benchmark::State& state) {
  const auto ex = fixtures::build_example("p5");
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_forms(ex.patch(), 0.3, 0.2));
}
BENCHMARK(BM_FundamentalForms);
BENCHMARK_MAIN();
