#include <benchmark/benchmark.h>

#include "opuc/moments.hpp"
#include "opuc/ode.hpp"
#include "opuc/opuc_sequence.hpp"
#include "opuc/structure.hpp"

using namespace opuc;

namespace {

void BM_MomentsSmooth(benchmark::State& state) {
    const auto spec = WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0);
    const int nodes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_moments(spec, 64, nodes));
    }
    state.SetItemsProcessed(state.iterations() * nodes);
}
BENCHMARK(BM_MomentsSmooth)->Arg(1 << 12)->Arg(1 << 14);

void BM_MomentsGraded(benchmark::State& state) {
    const auto spec = WeightSpec::generalized_jacobi(0.5, 0.25, 0.0);
    const int nodes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_moments(spec, 64, nodes));
    }
    state.SetItemsProcessed(state.iterations() * nodes);
}
BENCHMARK(BM_MomentsGraded)->Arg(1 << 12)->Arg(1 << 14);

void BM_LevinsonBuild(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto table = cached_moments(WeightSpec::exp_sine(Complex(0.3, 0.4)), 2 * N + 2, 1 << 14);
    for (auto _ : state) {
        benchmark::DoNotOptimize(OpucSequence::build(*table, N));
    }
}
BENCHMARK(BM_LevinsonBuild)->Arg(15)->Arg(31);

void BM_StructureResidual(benchmark::State& state) {
    const auto spec = WeightSpec::generalized_jacobi(0.5, 0.25, 0.0);
    const auto table = cached_moments(spec, 2 * 14 + 2, 1 << 14);
    const OpucSequence seq = OpucSequence::build(*table, 14);
    const PearsonPair pair = spec.pearson();
    const auto pts = unit_circle_samples();
    for (auto _ : state) {
        double acc = 0.0;
        for (int n = 3; n <= 12; ++n) acc += structure_residual(seq, pair, n, pts);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_StructureResidual);

void BM_SpecializedCatalog(benchmark::State& state) {
    const auto spec = WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0);
    const auto table = cached_moments(spec, 2 * 14 + 2, 1 << 14);
    const OpucSequence seq = OpucSequence::build(*table, 14);
    const auto pts = unit_circle_samples();
    for (auto _ : state) {
        for (int n = 3; n <= 12; ++n) {
            benchmark::DoNotOptimize(specialized_equation_residuals(spec, seq, n, pts));
        }
    }
}
BENCHMARK(BM_SpecializedCatalog);

}  // namespace

BENCHMARK_MAIN();
