#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gapcode/codec.hpp"
#include "gapcode/derived.hpp"
#include "gapcode/oracle.hpp"

using namespace gapcode;

namespace {

std::vector<BitString> messages(std::size_t k, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<BitString> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        BitString x(k);
        for (std::size_t b = 0; b < k; ++b) x.set(b, rng() & 1);
        out.push_back(std::move(x));
    }
    return out;
}

constexpr std::size_t kPool = 4096;

void BM_Encode(benchmark::State& state)
{
    const auto s = f_ell(static_cast<int>(state.range(0)));
    const auto pool = messages(s.k(), kPool, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode(pool[i++ % kPool], s));
    }
    state.counters["k"] = static_cast<double>(s.k());
    state.SetItemsProcessed(state.iterations());
}

void BM_Decode(benchmark::State& state)
{
    const auto s = f_ell(static_cast<int>(state.range(0)));
    std::vector<Codeword> words;
    for (const auto& x : messages(s.k(), kPool, 2)) words.push_back(encode(x, s));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode(words[i++ % kPool], s));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_FindAnchor(benchmark::State& state)
{
    const auto s = f_ell(static_cast<int>(state.range(0)));
    std::vector<GapVector> gaps;
    for (const auto& x : messages(s.k(), kPool, 3)) gaps.push_back(extract_gaps(encode(x, s)));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_anchor(gaps[i++ % kPool], s));
    }
}

void BM_Decode2(benchmark::State& state)
{
    const auto ell = static_cast<int>(state.range(0));
    const auto s = f_hat(ell);
    std::vector<Codeword> words;
    for (const auto& x : messages(s.k(), kPool, 4)) words.push_back(encode(x, s));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode2(words[i++ % kPool], s));
    }
}

// enumerative baseline: lexicographic unranking of a constant-weight word
void BM_UnrankLex(benchmark::State& state)
{
    const auto ell = static_cast<int>(state.range(0));
    const Index n = Index{1} << ell;
    const auto k = f_ell(ell).k();
    std::mt19937_64 rng(5);
    std::vector<BigInt> ranks;
    for (std::size_t i = 0; i < 256; ++i) {
        BigInt r = 0;
        for (std::size_t b = 0; b < k; ++b) r = (r << 1) | (rng() & 1);
        ranks.push_back(r);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(unrank_lex(ranks[i++ % ranks.size()], n, static_cast<std::size_t>(ell)));
    }
}

} // namespace

BENCHMARK(BM_Encode)->DenseRange(8, 24, 4)->Arg(10)->Arg(18)->Arg(20);
BENCHMARK(BM_Decode)->DenseRange(8, 24, 4);
BENCHMARK(BM_FindAnchor)->DenseRange(8, 24, 4);
BENCHMARK(BM_Decode2)->DenseRange(8, 24, 4);
BENCHMARK(BM_UnrankLex)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK_MAIN();
