#include <benchmark/benchmark.h>

#include "cubicloc/admissible.hpp"
#include "cubicloc/asymptotics.hpp"
#include "cubicloc/counting.hpp"
#include "cubicloc/cubic_residue.hpp"
#include "cubicloc/local_solubility.hpp"
#include "cubicloc/sieves.hpp"

using namespace cubicloc;

static void BM_PowerResidueSymbol(benchmark::State& state) {
    const Eisenstein pi = pi_above(100003);  // split prime near 1e5
    std::int64_t n = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(power_residue_symbol({n, 0}, pi));
        if (++n == 99990) n = 2;
    }
}
BENCHMARK(BM_PowerResidueSymbol);

static void BM_SolubleEverywhere(benchmark::State& state) {
    std::int64_t a = 1;
    for (auto _ : state) {
        const FormCoefficients f{a, a + 1};
        if (satisfies_counting_predicate(f))
            benchmark::DoNotOptimize(soluble_everywhere(f).everywhere_soluble);
        if (++a == 5000) a = 1;
    }
}
BENCHMARK(BM_SolubleEverywhere);

static void BM_OracleAtP(benchmark::State& state) {
    const std::int64_t p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle_at_p(p, 2, p));
}
BENCHMARK(BM_OracleAtP)->Arg(7)->Arg(31)->Arg(103)->Arg(307);

static void BM_SieveBuild(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(SieveTables::build(state.range(0)).limit());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SieveBuild)->Range(1 << 12, 1 << 20)->Complexity();

static void BM_CountPairs(benchmark::State& state) {
    const auto tables = SieveTables::build(state.range(0));
    for (auto _ : state) {
        const auto r = count_soluble_pairs(tables, state.range(0), state.range(0));
        benchmark::DoNotOptimize(r.count);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountPairs)->Arg(1000)->Arg(10000)->Arg(50000)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_EulerProduct(benchmark::State& state) {
    for (auto _ : state) {
        const auto est = c2_truncated(state.range(0));
        benchmark::DoNotOptimize(est.c2_estimate);
    }
}
BENCHMARK(BM_EulerProduct)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_AdmissibleGenerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(AdmissibleTable::generate().size());
}
BENCHMARK(BM_AdmissibleGenerate);

BENCHMARK_MAIN();
