// Serial reference versus OpenMP execution of the two parallel kernels:
// exhaustive axiom verification and the residuation miner.
//
//   ./build/bench/resid_bench --benchmark_filter=Verify
//   OMP_NUM_THREADS=8 ./build/bench/resid_bench

#include <benchmark/benchmark.h>

#include <map>

#include "resid/constructions.hpp"
#include "resid/fixtures.hpp"
#include "resid/miner.hpp"

namespace {

using namespace resid;

// Four-frame extension of an antichain: |P| + 4 elements, built without
// verification so the benchmark times only the scan.
const ResiduatedStructure& frame_over_antichain(Index k) {
    static std::map<Index, ResiduatedStructure> cache;
    auto it = cache.find(k);
    if (it == cache.end()) {
        const InvolutedPoset ip(fixtures::antichain(k), Involution::identity(k));
        it = cache.emplace(k, extend_by_four_chain(ip, ExtensionMode::add_four, Verify::no).structure).first;
    }
    return it->second;
}

void BM_Verify(benchmark::State& state, Execution exec) {
    const auto& s = frame_over_antichain(static_cast<Index>(state.range(0)));
    for (auto _ : state) {
        auto report = verify_residuated(s, exec);
        benchmark::DoNotOptimize(report);
    }
    const auto n = static_cast<double>(s.size());
    state.counters["triples"] = benchmark::Counter(2 * n * n * n, benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Mine(benchmark::State& state, Execution exec) {
    const InvolutedPoset ip = state.range(0) == 0 ? fixtures::kleene_six() : fixtures::chain_involuted(static_cast<Index>(state.range(0)));
    MinerOptions options;
    options.require_negation = false;
    options.limit = 1U << 16;
    options.exec = exec;
    for (auto _ : state) {
        auto outcome = find_residuations(ip, options);
        benchmark::DoNotOptimize(outcome);
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Verify, serial, Execution::serial)->Arg(28)->Arg(60)->Arg(124)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, parallel, Execution::parallel)->Arg(28)->Arg(60)->Arg(124)->Unit(benchmark::kMillisecond);
// Argument 0 selects the six-element Kleene algebra, otherwise an n-chain.
BENCHMARK_CAPTURE(BM_Mine, serial, Execution::serial)->Arg(0)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Mine, parallel, Execution::parallel)->Arg(0)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
