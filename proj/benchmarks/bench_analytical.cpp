#include <benchmark/benchmark.h>

#include "bruns/analytical.hpp"
#include "bruns/model.hpp"

namespace {

const bruns::InningsSpec kOdi{};
const bruns::BernoulliParams kRichards{0.9020, 0.9020 / 47.00};

void BM_MomentSummary(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bruns::moment_summary(kRichards, kOdi));
    }
}
BENCHMARK(BM_MomentSummary);

void BM_RawMomentByQuota(benchmark::State& state) {
    const bruns::InningsSpec spec{static_cast<int>(state.range(0)), 10};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bruns::raw_moment(kRichards, spec, 1));
    }
}
BENCHMARK(BM_RawMomentByQuota)->Arg(120)->Arg(300)->Arg(600)->Arg(1200);

} // namespace
