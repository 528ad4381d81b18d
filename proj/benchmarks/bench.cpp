// Microbenchmarks for the hot paths: word-span growth, canonicalization,
// Smith normal form, the two thinness tests, and a classification slice.

#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "thincode/code.hpp"
#include "thincode/intlin.hpp"
#include "thincode/search.hpp"
#include "thincode/simplex.hpp"

namespace {

using namespace thincode;

GeneratingMatrix family_generator(std::int64_t n) {
    const std::int64_t h = n / 2;
    return GeneratingMatrix(n, {{h, 0, h, 0, 0}, {0, h, h, 1, n - 1}});
}

// a mid-size non-thin code over Z_6, length 6, 216 words
LinearCode probe_code() {
    GeneratingMatrix g(6, {{1, 1, 1, 1, 1, 1}, {0, 2, 4, 0, 2, 4}, {3, 3, 0, 0, 3, 3}});
    return span_words(g);
}

void bm_span_words_family(benchmark::State& state) {
    GeneratingMatrix g = family_generator(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(span_words(g));
    }
}
BENCHMARK(bm_span_words_family)->Arg(8)->Arg(40);

void bm_canonical_form(benchmark::State& state) {
    LinearCode code = probe_code();
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(code));
    }
}
BENCHMARK(bm_canonical_form);

void bm_smith_normal_form(benchmark::State& state) {
    std::mt19937_64 rng(99);
    const std::size_t n = 6;
    std::vector<BigInt> entries;
    for (std::size_t i = 0; i < n * n; ++i) {
        entries.emplace_back(static_cast<std::int64_t>(rng() % 41) - 20);
    }
    IntegerMatrix a(n, n, entries);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(a));
    }
}
BENCHMARK(bm_smith_normal_form);

// thin inputs are the worst case: no early exit on a full-weight word, so the
// census scans every word and the coverage test tries every combination
void bm_thin_by_census(benchmark::State& state) {
    LinearCode code = span_words(family_generator(40));
    for (auto _ : state) {
        benchmark::DoNotOptimize(code);
        benchmark::DoNotOptimize(is_thin(code));
    }
}
BENCHMARK(bm_thin_by_census);

void bm_thin_by_coverage(benchmark::State& state) {
    GeneratingMatrix g = family_generator(40);
    for (auto _ : state) {
        benchmark::DoNotOptimize(g);
        benchmark::DoNotOptimize(coverage_is_thin(g));
    }
}
BENCHMARK(bm_thin_by_coverage);

void bm_search_slice(benchmark::State& state) {
    SearchConfig cfg;
    cfg.moduli = {static_cast<std::int64_t>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_thin_codes(cfg));
    }
}
BENCHMARK(bm_search_slice)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
