#include <benchmark/benchmark.h>

#include "csurf/cantor.hpp"
#include "csurf/classify.hpp"
#include "csurf/conformal.hpp"
#include "csurf/hyperbolic.hpp"
#include "csurf/interval.hpp"
#include "csurf/seqspec.hpp"

using namespace csurf;

static void BM_IntervalMulDiv(benchmark::State& state) {
    Prec prec = state.range(0);
    Interval a = Interval::from_ratio(355, 113, prec);
    Interval b = Interval::from_ratio(-781, 997, prec);
    for (auto _ : state) {
        Interval c = a * b / (a + b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_IntervalMulDiv)->Arg(64)->Arg(128)->Arg(256);

static void BM_EllipticK(benchmark::State& state) {
    Prec prec = state.range(0);
    Interval k = Interval::from_ratio(7, 10, prec);
    for (auto _ : state) {
        Interval v = elliptic_K(k);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EllipticK)->Arg(128)->Arg(256);

static void BM_TwoSlitModulus(benchmark::State& state) {
    Prec prec = 128;
    Interval a(prec);
    Interval b = Interval::from_ratio(1, 4, prec);
    Interval c = Interval::from_ratio(3, 4, prec);
    Interval d = Interval::from_long(1, prec);
    for (auto _ : state) {
        Interval v = two_slit_modulus(a, b, c, d).value;
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_TwoSlitModulus);

static void BM_BuildLevels(benchmark::State& state) {
    SequenceSpec spec = parse_spec(R"({"family":"constant","q":"1/2"})");
    long depth = state.range(0);
    for (auto _ : state) {
        CantorTree tree = build_levels(spec, depth, 128);
        benchmark::DoNotOptimize(tree.level(depth).length);
    }
}
BENCHMARK(BM_BuildLevels)->Arg(4)->Arg(8);

static void BM_PantsSeamDistance(benchmark::State& state) {
    Interval a = Interval::from_long(1, 128);
    Interval b = Interval::from_long(2, 128);
    Interval c = Interval::from_long(3, 128);
    for (auto _ : state) {
        Interval v = pants_seam_distance(a, b, c);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_PantsSeamDistance);

static void BM_Classify(benchmark::State& state) {
    SequenceSpec spec = parse_spec(R"({"family":"iterated_exp","q1":"1/2"})");
    Interval c = Interval::from_ratio(1, 3, 128);
    for (auto _ : state) {
        ClassificationReport r = classify(spec, 32, c, 128);
        benchmark::DoNotOptimize(r.verdict);
    }
}
BENCHMARK(BM_Classify);

BENCHMARK_MAIN();
