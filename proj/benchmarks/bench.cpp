#include <benchmark/benchmark.h>

#include "stanley/decomposition.hpp"
#include "stanley/homology.hpp"
#include "stanley/solver.hpp"
#include "stanley/triple.hpp"

using namespace stanley;

namespace {

SqfIdeal maximalIdeal(int n) {
    return SqfIdeal::prime(PolyContext(n), VarSet::full(n));
}

SqfIdeal workedIdeal() {
    PolyContext ctx(4);
    return intersectPrimes(ctx, {VarSet::of({1, 2}), VarSet::of({2, 3, 4}), VarSet::of({1, 3})});
}

void BM_ExactSdepthMaximal(benchmark::State& state) {
    SqfIdeal I = maximalIdeal(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exactSdepth(I).value);
}
BENCHMARK(BM_ExactSdepthMaximal)->DenseRange(3, 6);

void BM_ExactSdepthMaximal7(benchmark::State& state) {
    SolverOptions opts{7};
    SqfIdeal I = maximalIdeal(7);
    for (auto _ : state) benchmark::DoNotOptimize(exactSdepth(I, opts).value);
}
BENCHMARK(BM_ExactSdepthMaximal7)->Unit(benchmark::kMillisecond);

void BM_DecideFailing(benchmark::State& state) {
    // the expensive direction: prove no partition exists one above the answer
    const int n = static_cast<int>(state.range(0));
    SqfIdeal I = maximalIdeal(n);
    SupportPoset poset = buildPoset(I);
    const int k = (n + 1) / 2 + 1;
    for (auto _ : state) benchmark::DoNotOptimize(decideAtLeast(poset, k).has_value());
}
BENCHMARK(BM_DecideFailing)->DenseRange(4, 6);

void BM_VerifyDecomposition(benchmark::State& state) {
    SqfIdeal I = maximalIdeal(static_cast<int>(state.range(0)));
    StanleyDecomposition d = exactSdepth(I).witness;
    for (auto _ : state) benchmark::DoNotOptimize(verifyDecomposition(d).partition);
}
BENCHMARK(BM_VerifyDecomposition)->DenseRange(4, 6);

void BM_DepthOracle(benchmark::State& state) {
    SqfIdeal I = maximalIdeal(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(depthOracle(I));
}
BENCHMARK(BM_DepthOracle)->DenseRange(3, 6);

void BM_DepthOracleWorked(benchmark::State& state) {
    SqfIdeal I = workedIdeal();
    for (auto _ : state) benchmark::DoNotOptimize(depthOracle(I));
}
BENCHMARK(BM_DepthOracleWorked);

void BM_AnalyzeWorkedExample(benchmark::State& state) {
    PolyContext ctx(4);
    for (auto _ : state) {
        PrimeTriple t = normalizeTriple(ctx, VarSet::of({1, 2}), VarSet::of({2, 3, 4}),
                                        VarSet::of({1, 3}));
        benchmark::DoNotOptimize(sdepthLowerBound(t));
        benchmark::DoNotOptimize(depthFormula(t));
    }
}
BENCHMARK(BM_AnalyzeWorkedExample);

void BM_DecomposeWorkedExample(benchmark::State& state) {
    PolyContext ctx(4);
    PrimeTriple t = normalizeTriple(ctx, VarSet::of({1, 2}), VarSet::of({2, 3, 4}),
                                    VarSet::of({1, 3}));
    for (auto _ : state) benchmark::DoNotOptimize(decomposeTriple(t).spaces().size());
}
BENCHMARK(BM_DecomposeWorkedExample);

void BM_TripleSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PolyContext ctx(n);
    for (auto _ : state) {
        int worst = 0;
        forEachValidTriple(n, [&](VarSet a, VarSet b, VarSet c) {
            PrimeTriple t = normalizeTriple(ctx, a, b, c);
            worst = std::max(worst, sdepthLowerBound(t) - depthFormula(t));
        });
        benchmark::DoNotOptimize(worst);
    }
}
BENCHMARK(BM_TripleSweep)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
