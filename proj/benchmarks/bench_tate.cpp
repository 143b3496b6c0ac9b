#include "tate/exactla.hpp"
#include "tate/mapgen.hpp"
#include "tate/resolve.hpp"
#include "tate/weights.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tate;

namespace {

la::Matrix random_matrix(const la::PrimeField& f, std::size_t rows, std::size_t cols, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    la::Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = static_cast<la::Scalar>(rng() % f.prime());
    return m;
}

void BM_Rank(benchmark::State& state)
{
    const la::PrimeField f(la::kDefaultPrime);
    const auto n = static_cast<std::size_t>(state.range(0));
    const la::Matrix m = random_matrix(f, n, n, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(la::rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(32, 512);

void BM_Kernel(benchmark::State& state)
{
    const la::PrimeField f(la::kDefaultPrime);
    const auto n = static_cast<std::size_t>(state.range(0));
    const la::Matrix m = random_matrix(f, n / 2, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(la::kernel(m));
}
BENCHMARK(BM_Kernel)->RangeMultiplier(2)->Range(32, 512);

void BM_TateGeneral(benchmark::State& state)
{
    const int a = static_cast<int>(state.range(0)), b = static_cast<int>(state.range(1)),
              w = static_cast<int>(state.range(2));
    const auto phi = maps::general_map({maps::MapKind::general, a, b, w, la::kDefaultPrime, 7, false});
    for (auto _ : state)
        benchmark::DoNotOptimize(res::build_tate(phi, -3, 4));
}
BENCHMARK(BM_TateGeneral)->Args({2, 2, 3})->Args({3, 2, 4})->Args({3, 3, 5})->Unit(benchmark::kMillisecond);

void BM_TateSkew(benchmark::State& state)
{
    const int a = static_cast<int>(state.range(0)), w = static_cast<int>(state.range(1));
    const auto phi = maps::skew_map({maps::MapKind::skew, a, a, w, la::kDefaultPrime, 7, false});
    for (auto _ : state)
        benchmark::DoNotOptimize(res::build_tate(phi, -2, 3));
}
BENCHMARK(BM_TateSkew)->Args({3, 3})->Args({4, 5})->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state)
{
    const auto phi = maps::symmetric_map({maps::MapKind::symmetric, 3, 3, 5, la::kDefaultPrime, 7, false});
    const auto window = res::build_tate(phi, -2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(res::verify_exactness(window));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

void BM_CohomologyTable(benchmark::State& state)
{
    const wt::Partition part({3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(wt::cohomology_table(part, 5, -10, 10));
}
BENCHMARK(BM_CohomologyTable);

} // namespace
BENCHMARK_MAIN();
