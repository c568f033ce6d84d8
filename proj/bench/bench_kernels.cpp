// Serial reference vs OpenMP kernels across lattice sizes.
//   ./som_bench --benchmark_filter=Bmu

#include <benchmark/benchmark.h>

#include <vector>

#include "som/kernels.hpp"
#include "som/rng.hpp"

namespace {

constexpr std::size_t kDim = 8;

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
    som::Rng rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform01();
    return v;
}

template <auto Kernel>
void BM_FindBmu(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const auto w = random_values(side * side * kDim, 1);
    const auto x = random_values(kDim, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(w, kDim, x));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(side * side));
}

template <auto Kernel>
void BM_Update(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const som::LatticeSpec lat(side, side);
    auto w = random_values(side * side * kDim, 1);
    const auto x = random_values(kDim, 2);
    for (auto _ : state) {
        Kernel(w, kDim, lat, x, side * side / 2, 0.01, static_cast<double>(side) / 4);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(side * side));
}

template <auto Kernel>
void BM_Assign(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const auto w = random_values(side * side * kDim, 1);
    const auto samples = random_values(1000 * kDim, 3);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(w, kDim, samples));
    state.SetItemsProcessed(state.iterations() * 1000);
}

} // namespace

BENCHMARK(BM_FindBmu<som::kernels::serial::find_bmu>)->Name("Bmu/serial")->RangeMultiplier(2)->Range(8, 128);
BENCHMARK(BM_FindBmu<som::kernels::omp::find_bmu>)->Name("Bmu/omp")->RangeMultiplier(2)->Range(8, 128);
BENCHMARK(BM_Update<som::kernels::serial::update>)->Name("Update/serial")->RangeMultiplier(2)->Range(8, 128);
BENCHMARK(BM_Update<som::kernels::omp::update>)->Name("Update/omp")->RangeMultiplier(2)->Range(8, 128);
BENCHMARK(BM_Assign<som::kernels::serial::assign>)->Name("Assign/serial")->RangeMultiplier(4)->Range(8, 128);
BENCHMARK(BM_Assign<som::kernels::omp::assign>)->Name("Assign/omp")->RangeMultiplier(4)->Range(8, 128);

BENCHMARK_MAIN();
