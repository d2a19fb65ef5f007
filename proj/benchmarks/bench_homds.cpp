#include <benchmark/benchmark.h>

#include "homds/codes.hpp"
#include "homds/intersect.hpp"
#include "homds/rng.hpp"

using namespace homds;

namespace {

const PrimeField BIG(kMersenne61);

SetFamily sample_family(int ell) {
    SplitMix64 rng(static_cast<std::uint64_t>(ell));
    SetFamily f{8, 5, {}, {}};
    for (int i = 0; i < ell; ++i) {
        IndexSet s;
        const int size = 1 + static_cast<int>(rng.uniform(5));
        while (s.size() < size) s.insert(static_cast<int>(rng.uniform(8)));
        f.sets.push_back(s);
    }
    return f;
}

LinearCode sample_rs(int n, int k) {
    std::vector<std::uint64_t> pts;
    for (int i = 0; i < n; ++i) pts.push_back(derive_seed(7, static_cast<std::uint64_t>(i)) % kMersenne61);
    return vandermonde(BIG, pts, k);
}

}  // namespace

static void BM_Rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const MatrixFp m = random_matrix(BIG, n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

static void BM_GenericDimPartition(benchmark::State& state) {
    const SetFamily f = sample_family(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(generic_dim_partition(f).dimension);
}
BENCHMARK(BM_GenericDimPartition)->DenseRange(2, 10, 2);

static void BM_GenericDimLp(benchmark::State& state) {
    const SetFamily f = sample_family(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(generic_dim_lp(f).result.dimension);
}
BENCHMARK(BM_GenericDimLp)->DenseRange(2, 14, 4);

static void BM_GenericDimRandomized(benchmark::State& state) {
    const SetFamily f = sample_family(static_cast<int>(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(generic_dim_randomized(f, BIG, 2, seed++).dimension);
}
BENCHMARK(BM_GenericDimRandomized)->DenseRange(2, 14, 4);

static void BM_MdsEll(benchmark::State& state) {
    const LinearCode c = sample_rs(6, 3);
    const int ell = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(is_mds_ell(c, ell).holds);
}
BENCHMARK(BM_MdsEll)->Arg(2)->Arg(3);

static void BM_GzpEll(benchmark::State& state) {
    const LinearCode c = sample_rs(6, 3);
    for (auto _ : state) benchmark::DoNotOptimize(is_gzp_ell(c, 3).holds);
}
BENCHMARK(BM_GzpEll);

static void BM_LdMdsDirect(benchmark::State& state) {
    const LinearCode c = sample_rs(6, 3);
    for (auto _ : state) benchmark::DoNotOptimize(is_ld_mds_le(c, 2, LdMdsStrategy::direct).holds);
}
BENCHMARK(BM_LdMdsDirect);

static void BM_RandomRsTrial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(random_rs_trial(6, 3, 2, BIG, 10, 1, static_cast<int>(state.range(0))).failures);
}
BENCHMARK(BM_RandomRsTrial)->Arg(1)->Arg(2)->UseRealTime();
BENCHMARK_MAIN();
