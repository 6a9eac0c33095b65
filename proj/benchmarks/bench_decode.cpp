#include <benchmark/benchmark.h>

#include "dscode/decoder.hpp"
#include "dscode/oracle.hpp"
#include "dscode/rs_decoder.hpp"

using namespace dscode;

namespace {

Grid make_grid(const PrimeField& f, std::vector<std::size_t> sizes) {
    std::vector<std::vector<Fp>> axes;
    for (std::size_t k : sizes) {
        std::vector<Fp> a;
        for (std::size_t v = 0; v < k; ++v) a.push_back(Fp{v});
        axes.push_back(std::move(a));
    }
    return Grid(f, std::move(axes));
}

void BM_FieldMul(benchmark::State& state) {
    PrimeField f((std::uint64_t{1} << 61) - 1);
    Fp a{123456789012345ULL}, b{987654321098765ULL};
    for (auto _ : state) {
        a = f.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul);

void BM_GridInterpolate(benchmark::State& state) {
    PrimeField f(101);
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    Grid g = make_grid(f, {k, k});
    SplitMix64 rng(1);
    Word table(g.point_count());
    for (auto& v : table) v = Fp{rng.below(101)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_interpolate(g, table));
    }
}
BENCHMARK(BM_GridInterpolate)->Arg(8)->Arg(16)->Arg(32);

void BM_RsDecode(benchmark::State& state) {
    PrimeField f(101);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const std::size_t d = n / 3;
    std::vector<Fp> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = Fp{i};
    SplitMix64 rng(2);
    std::vector<Fp> coeffs(d + 1);
    for (auto& c : coeffs) c = Fp{rng.below(101)};
    UniPoly poly(f, coeffs);
    Word clean(n);
    for (std::size_t i = 0; i < n; ++i) clean[i] = poly.eval(xs[i]);
    Word noisy = corrupt(clean, (n - d - 1) / 4, f, rng);
    WeightedWord w = WeightedWord::hard(noisy);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weighted_rs_decode(f, xs, d, w));
    }
}
BENCHMARK(BM_RsDecode)->Arg(8)->Arg(16)->Arg(32);

void BM_DownsetDecode(benchmark::State& state) {
    PrimeField f(101);
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    Grid g = make_grid(f, {k, k});
    CodeSpec spec(g, Downset::total_degree(2, static_cast<std::uint32_t>(k / 2)));
    SplitMix64 rng(3);
    Word clean = encode(spec, random_coefficients(spec, rng));
    Word noisy = corrupt(clean, (spec.min_distance() + 1) / 2 - 1, f, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(unique_decode(spec, noisy));
    }
}
BENCHMARK(BM_DownsetDecode)->Arg(6)->Arg(10)->Arg(14);

void BM_BruteForceNearest(benchmark::State& state) {
    PrimeField f(3);
    Grid g = make_grid(f, {3, 3});
    CodeSpec spec(g, Downset::total_degree(2, static_cast<std::uint32_t>(state.range(0))));
    SplitMix64 rng(4);
    Word clean = encode(spec, random_coefficients(spec, rng));
    WeightedWord w = WeightedWord::hard(corrupt(clean, 1, f, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_nearest(spec, w));
    }
}
BENCHMARK(BM_BruteForceNearest)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
