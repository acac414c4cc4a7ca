// Serial reference vs OpenMP kernels on fixed mid-size instances.

#include <benchmark/benchmark.h>

#include "relim/catalog.hpp"
#include "relim/kernels.hpp"
#include "relim/limit.hpp"
#include "relim/rng.hpp"
#include "relim/seed.hpp"

namespace {

using namespace relim;

const Signature kBinary = binary_signature();

Structure host_structure(int size) { return random_structure(kBinary, size, 12345, 0.3); }

Structure pattern_structure() { return random_structure(kBinary, 4, 999, 0.4); }

StepLimit half_density() {
    StepLimit f(kBinary, 2);
    for (std::uint8_t c1 = 1; c1 <= 2; ++c1)
        for (std::uint8_t c2 = 1; c2 <= 2; ++c2) f.select(0, 1, {c1, c2, 2});
    return f;
}

StepLimit ternary_limit(int l) {
    return [&] {
        Signature sig({{"R", 3}});
        StepLimit f(sig, l);
        const auto parts = partitions_of(3);
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const int t = parts[pr].class_count();
            const std::size_t comps = (1ULL << t) - 1;
            std::uint64_t total = 1;
            for (std::size_t q = 0; q < comps; ++q) total *= static_cast<std::uint64_t>(l);
            for (std::uint64_t rank = 0; rank < total; rank += 2) {
                std::vector<std::uint8_t> colors(comps);
                std::uint64_t rest = rank;
                for (std::size_t q = 0; q < comps; ++q) {
                    colors[q] = static_cast<std::uint8_t>(rest % l + 1);
                    rest /= static_cast<std::uint64_t>(l);
                }
                f.select(0, static_cast<int>(pr), std::move(colors));
            }
        }
        return f;
    }();
}

void BM_induced_copies_serial(benchmark::State& state) {
    const Structure m = pattern_structure();
    const Structure n = host_structure(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::count_induced_copies(m, n));
}
BENCHMARK(BM_induced_copies_serial)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_induced_copies_parallel(benchmark::State& state) {
    const Structure m = pattern_structure();
    const Structure n = host_structure(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_induced_copies(m, n));
}
BENCHMARK(BM_induced_copies_parallel)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_embeddings_serial(benchmark::State& state) {
    const Structure m = pattern_structure();
    const Structure n = host_structure(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::count_embeddings(m, n));
}
BENCHMARK(BM_embeddings_serial)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_embeddings_parallel(benchmark::State& state) {
    const Structure m = pattern_structure();
    const Structure n = host_structure(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(m, n));
}
BENCHMARK(BM_embeddings_parallel)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_realize_serial(benchmark::State& state) {
    const StepLimit f = half_density();
    const int m = static_cast<int>(state.range(0));
    const SeedTuple y = sample_seed(m, 2, 777);
    for (auto _ : state) benchmark::DoNotOptimize(serial::realize(f, m, y));
}
BENCHMARK(BM_realize_serial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_realize_parallel(benchmark::State& state) {
    const StepLimit f = half_density();
    const int m = static_cast<int>(state.range(0));
    const SeedTuple y = sample_seed(m, 2, 777);
    for (auto _ : state) benchmark::DoNotOptimize(realize(f, m, y));
}
BENCHMARK(BM_realize_parallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_embedding_measure_serial(benchmark::State& state) {
    const StepLimit f = ternary_limit(static_cast<int>(state.range(0)));
    const Structure m = random_structure(Signature({{"R", 3}}), 4, 31, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(serial::embedding_measure(m, f));
}
BENCHMARK(BM_embedding_measure_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_embedding_measure_parallel(benchmark::State& state) {
    const StepLimit f = ternary_limit(static_cast<int>(state.range(0)));
    const Structure m = random_structure(Signature({{"R", 3}}), 4, 31, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(embedding_measure(m, f));
}
BENCHMARK(BM_embedding_measure_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_mc_frequency_serial(benchmark::State& state) {
    const StepLimit f = half_density();
    const Structure m = random_structure(kBinary, 3, 5, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::mc_embedding_frequency(m, f, 100000, 17));
}
BENCHMARK(BM_mc_frequency_serial)->Unit(benchmark::kMillisecond);

void BM_mc_frequency_parallel(benchmark::State& state) {
    const StepLimit f = half_density();
    const Structure m = random_structure(kBinary, 3, 5, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(mc_embedding_frequency(m, f, 100000, 17));
}
BENCHMARK(BM_mc_frequency_parallel)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
