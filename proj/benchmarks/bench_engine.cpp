#include <benchmark/benchmark.h>

#include "ainfty/coderivation.hpp"
#include "ainfty/example.hpp"
#include "ainfty/linfty.hpp"
#include "ainfty/multimap.hpp"
#include "ainfty/verify.hpp"

namespace {

using namespace ainfty;

void BM_CoderivationSweep(benchmark::State& state) {
    const auto s = example::structure();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_structure(s, n, CheckMode::coderivation, {1}));
    }
}
BENCHMARK(BM_CoderivationSweep)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_DirectSweep(benchmark::State& state) {
    const auto s = example::structure();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_structure(s, n, CheckMode::direct, {1}));
    }
}
BENCHMARK(BM_DirectSweep)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_DSquaredWord(benchmark::State& state) {
    const auto s = example::structure();
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto primed = s.primed_family(n);
    std::vector<BasisIndex> letters(n, example::w);
    letters.front() = example::v1;
    letters.back() = example::v2;
    const Word x(std::move(letters));
    for (auto _ : state) benchmark::DoNotOptimize(d_squared(primed, x));
}
BENCHMARK(BM_DSquaredWord)->DenseRange(2, 10, 2);

void BM_Prime(benchmark::State& state) {
    const MultiMap m = example::m(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(prime(m));
}
BENCHMARK(BM_Prime)->DenseRange(2, 10, 2);

void BM_Symmetrize(benchmark::State& state) {
    const MultiMap mp = example::mprime(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(symmetrize_prime(mp));
}
BENCHMARK(BM_Symmetrize)->DenseRange(2, 6);

void BM_LinftySweep(benchmark::State& state) {
    const auto s = example::structure();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_linfty(s, n, {1}));
}
BENCHMARK(BM_LinftySweep)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
