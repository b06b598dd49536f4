// Serial vs OpenMP comparison for the three parallel kernels.  The parallel
// and serial twins compute identical results (the tests pin that); this
// target measures what the parallelism buys on the host machine.

#include "polycurv/families.hpp"
#include "polycurv/forman.hpp"
#include "polycurv/resistance.hpp"
#include "polycurv/scan.hpp"

#include "support/testsupport.hpp"

#include <benchmark/benchmark.h>

#include <sstream>

using namespace polycurv;

namespace {

const TwoSkeleton& big_tube() {
    static const TwoSkeleton sk = tube_skeleton(800);
    return sk;
}

const Graph& medium_prism() {
    static const Graph g = prism_skeleton(120).graph;
    return g;
}

const std::string& corpus() {
    static const std::string bytes = testsupport::synthetic_corpus(600, 20250815);
    return bytes;
}

}  // namespace

static void BM_forman_profile_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(forman_profile(big_tube()));
}
BENCHMARK(BM_forman_profile_parallel);

static void BM_forman_profile_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(forman_profile_serial(big_tube()));
}
BENCHMARK(BM_forman_profile_serial);

static void BM_all_pairs_parallel(benchmark::State& state) {
    LaplacianSystem sys = laplacian_system(medium_prism());
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs_resistance(sys));
}
BENCHMARK(BM_all_pairs_parallel);

static void BM_all_pairs_serial(benchmark::State& state) {
    LaplacianSystem sys = laplacian_system(medium_prism());
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs_resistance_serial(sys));
}
BENCHMARK(BM_all_pairs_serial);

static void BM_scan_corpus(benchmark::State& state) {
    for (auto _ : state) {
        std::istringstream in(corpus());
        benchmark::DoNotOptimize(scan_corpus(in, ScanPredicate::forman_positive, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_scan_corpus)->Arg(1)->Arg(0)->ArgName("jobs");

BENCHMARK_MAIN();
