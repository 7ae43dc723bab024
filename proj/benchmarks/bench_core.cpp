#include <benchmark/benchmark.h>

#include "testutil.hpp"
#include "weylbb/connect.hpp"
#include "weylbb/division.hpp"

using namespace weylbb;
using testutil::Rng;

static void BM_PolyMul(benchmark::State& state) {
  VarTableP t = make_table({"x1", "x2", "x3"});
  Rng rng(1);
  Poly p = testutil::rand_poly(t, rng, 6, 25);
  Poly q = testutil::rand_poly(t, rng, 6, 25);
  for (auto _ : state) {
    Poly r = p * q;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PolyMul);

static void BM_RatFunAdd(benchmark::State& state) {
  VarTableP t = make_table({"x1", "x2"}, {"s"});
  Rng rng(2);
  RatFun f = testutil::rand_ratfun(t, rng, 3);
  RatFun g = testutil::rand_ratfun(t, rng, 3);
  for (auto _ : state) {
    RatFun r = f + g;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RatFunAdd);

static void BM_BorderDivide(benchmark::State& state) {
  VarTableP t = make_table({"x1", "x2"}, {"s"});
  Rng rng(3);
  BorderPrebasis G = testutil::rand_prebasis(t, rng, RingKind::Weyl, 4);
  WeylOp f = testutil::rand_op(t, rng, 3, 3);
  for (auto _ : state) {
    DivisionResult dr = border_divide(f, G);
    benchmark::DoNotOptimize(dr);
  }
}
BENCHMARK(BM_BorderDivide);

static void BM_Integrability(benchmark::State& state) {
  VarTableP t = make_table({"x1", "x2"});
  Rng rng(4);
  ConnectionSystem A = testutil::rand_integrable(t, rng, 4);
  for (auto _ : state) {
    ConnectionSystem copy = A;
    copy.verified_integrable = false;
    bool ok = check_integrability(copy);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_Integrability);

BENCHMARK_MAIN();
