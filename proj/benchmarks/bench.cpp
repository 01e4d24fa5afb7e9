#include <benchmark/benchmark.h>

#include "speechscore/asr.hpp"
#include "speechscore/diar.hpp"
#include "speechscore/prng.hpp"
#include "speechscore/sad.hpp"
#include "speechscore/time.hpp"

using namespace speechscore;

namespace {

Timeline random_speech(Prng& rng, Tick span, int segments) {
    std::vector<Interval> out;
    for (int i = 0; i < segments; ++i) {
        Tick a = static_cast<Tick>(rng.below(span));
        Tick d = 200 + static_cast<Tick>(rng.below(20000));
        out.push_back({a, std::min<Tick>(a + d, span)});
    }
    return Timeline::normalize(out);
}

void BM_timeline_algebra(benchmark::State& state) {
    Prng rng(1);
    constexpr Tick kSpan = 33 * 60 * 1000;
    Timeline a = random_speech(rng, kSpan, static_cast<int>(state.range(0)));
    Timeline b = random_speech(rng, kSpan, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(unite(a, b));
        benchmark::DoNotOptimize(intersect(a, b));
        benchmark::DoNotOptimize(subtract(a, b));
    }
}
BENCHMARK(BM_timeline_algebra)->Arg(100)->Arg(1000);

void BM_sad_score(benchmark::State& state) {
    Prng rng(2);
    constexpr Tick kSpan = 33 * 60 * 1000;
    Timeline ref = random_speech(rng, kSpan, 400);
    Timeline sys = random_speech(rng, kSpan, 400);
    auto regions = sad::build_scoring_regions(ref, {0, kSpan});
    for (auto _ : state) benchmark::DoNotOptimize(sad::score(regions, sys));
}
BENCHMARK(BM_sad_score);

void BM_der_score(benchmark::State& state) {
    Prng rng(3);
    constexpr Tick kSpan = 33 * 60 * 1000;
    std::vector<RttmTurn> rt, st;
    for (int i = 0; i < 300; ++i) {
        Tick a = static_cast<Tick>(rng.below(kSpan));
        Tick d = 500 + static_cast<Tick>(rng.below(20000));
        rt.push_back({"f", a, std::min<Tick>(d, kSpan - a),
                      "S" + std::to_string(rng.below(8))});
        a = static_cast<Tick>(rng.below(kSpan));
        st.push_back({"f", a, std::min<Tick>(d, kSpan - a),
                      "T" + std::to_string(rng.below(8))});
    }
    auto ref = diar::prepare_reference(rt, {});
    for (auto _ : state) {
        auto mapping = diar::map_speakers(ref, st);
        benchmark::DoNotOptimize(diar::score(ref, st, mapping));
    }
}
BENCHMARK(BM_der_score);

void BM_wer_align(benchmark::State& state) {
    Prng rng(4);
    static const char* vocab[] = {"go", "for", "launch", "roger", "copy",
                                  "over", "out", "stand", "by", "one"};
    asr::TokenSeq ref, hyp;
    for (int i = 0; i < state.range(0); ++i) {
        ref.push_back({vocab[rng.below(10)], false});
        hyp.push_back({vocab[rng.below(10)], false});
    }
    for (auto _ : state) benchmark::DoNotOptimize(asr::align(ref, hyp));
}
BENCHMARK(BM_wer_align)->Arg(50)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
