#include <benchmark/benchmark.h>

#include "bruns/model.hpp"
#include "bruns/simulate.hpp"

namespace {

const bruns::InningsSpec kOdi{};
const bruns::BernoulliParams kRichards{0.9020, 0.9020 / 47.00};

void BM_BernoulliInnings(benchmark::State& state) {
    bruns::SplitMix64 rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bruns::simulate_bernoulli_innings(kRichards, kOdi, rng));
    }
}
BENCHMARK(BM_BernoulliInnings);

void BM_DieInnings(benchmark::State& state) {
    const bruns::DiePmf pmf = bruns::DiePmf::book_cricket();
    bruns::SplitMix64 rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bruns::simulate_die_innings(pmf, kOdi, rng));
    }
}
BENCHMARK(BM_DieInnings);

void BM_Ensemble(benchmark::State& state) {
    const auto workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bruns::run_ensemble(kRichards, kOdi, 20000, 7, workers));
    }
}
BENCHMARK(BM_Ensemble)->Arg(1)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
