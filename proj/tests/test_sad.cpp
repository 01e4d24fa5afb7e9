#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "speechscore/prng.hpp"
#include "speechscore/sad.hpp"

using namespace speechscore;

namespace {

Timeline tl(std::vector<Interval> raw) { return Timeline::normalize(std::move(raw)); }

Timeline random_speech(Prng& rng, Tick span, int max_segments) {
    int n = 1 + static_cast<int>(rng.below(max_segments));
    std::vector<Interval> out;
    for (int i = 0; i < n; ++i) {
        Tick a = static_cast<Tick>(rng.below(span));
        Tick d = 1 + static_cast<Tick>(rng.below(span / 4));
        out.push_back({a, std::min<Tick>(a + d, span)});
    }
    return Timeline::normalize(out);
}

}  // namespace

TEST_CASE("collar construction, basic case") {
    auto regions = sad::build_scoring_regions(tl({{40000, 50000}}), {0, 100000});
    CHECK(regions.collars == tl({{39500, 40000}, {50000, 50500}}));
    CHECK(regions.scored_nonspeech == tl({{0, 39500}, {50500, 100000}}));
    CHECK(regions.scored_speech.duration() == 10000);
    CHECK(regions.scored_nonspeech.duration() == 89000);
}

TEST_CASE("short non-speech absorbed into collars") {
    // gap between collars is [20.5, 21.09-0.5) = [20.5, 20.59), 90 ms
    auto regions =
        sad::build_scoring_regions(tl({{10000, 20000}, {21090, 30000}}), {0, 40000});
    for (const Interval& iv : regions.scored_nonspeech.intervals()) {
        CHECK(iv.length() >= sad::kMinNonspeech);
        CHECK_FALSE((iv.onset >= 20000 && iv.offset <= 21090));
    }
    CHECK(regions.collars.contains(20500));
    CHECK(regions.collars.contains(20580));
}

TEST_CASE("no leading collar at file start") {
    auto regions = sad::build_scoring_regions(tl({{0, 10000}}), {0, 20000});
    CHECK(regions.collars == tl({{10000, 10500}}));
    CHECK(regions.scored_speech == tl({{0, 10000}}));
}

TEST_CASE("speech outside span rejected") {
    CHECK_THROWS_AS(sad::build_scoring_regions(tl({{0, 2000}}), {0, 1000}),
                    std::invalid_argument);
}

TEST_CASE("worked score values") {
    auto regions = sad::build_scoring_regions(tl({{40000, 50000}}), {0, 100000});

    sad::Score wide = sad::score(regions, tl({{38000, 53000}}));
    CHECK(wide.fp == 4000);
    CHECK(wide.fn == 0);
    CHECK(wide.p_fp == Rational(4, 89));
    CHECK(wide.dcf == Rational(1, 89));

    sad::Score narrow = sad::score(regions, tl({{42000, 47000}}));
    CHECK(narrow.fn == 5000);
    CHECK(narrow.fp == 0);
    CHECK(narrow.p_fn == Rational(1, 2));
    CHECK(narrow.dcf == Rational(3, 8));

    sad::Score perfect = sad::score(regions, regions.scored_speech);
    CHECK(perfect.fp == 0);
    CHECK(perfect.fn == 0);
    CHECK(perfect.dcf == Rational::zero());
}

TEST_CASE("partition conservation and oracle equivalence") {
    Prng rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        Tick span = 20000 + static_cast<Tick>(rng.below(280000));
        Timeline ref = random_speech(rng, span, 40);
        Timeline sys = random_speech(rng, span, 40);
        auto regions = sad::build_scoring_regions(ref, {0, span});

        CHECK(regions.scored_speech == ref);
        CHECK(unite(unite(regions.scored_speech, regions.scored_nonspeech),
                    regions.collars) == tl({{0, span}}));
        CHECK(intersect(regions.scored_speech, regions.scored_nonspeech).empty());
        CHECK(intersect(regions.scored_speech, regions.collars).empty());
        CHECK(intersect(regions.scored_nonspeech, regions.collars).empty());
        for (const Interval& iv : regions.scored_nonspeech.intervals())
            CHECK(iv.length() >= sad::kMinNonspeech);

        sad::Score fast = sad::score(regions, sys);
        oracles::SadCounts slow = oracles::sad_counts(regions, sys);
        CHECK(fast.tp == slow.tp);
        CHECK(fast.tn == slow.tn);
        CHECK(fast.fp == slow.fp);
        CHECK(fast.fn == slow.fn);
        CHECK(fast.tp + fast.fn + fast.fp + fast.tn ==
              span - regions.collars.duration());
    }
}

TEST_CASE("degenerate sides flagged") {
    auto all_speech = sad::build_scoring_regions(tl({{0, 10000}}), {0, 10000});
    sad::Score s = sad::score(all_speech, tl({{0, 10000}}));
    CHECK(s.degenerate);
    CHECK(s.p_fp == Rational::zero());

    auto no_speech = sad::build_scoring_regions(tl({}), {0, 10000});
    sad::Score n = sad::score(no_speech, tl({}));
    CHECK(n.degenerate);
    CHECK(n.p_fn == Rational::zero());
}

TEST_CASE("pooling is time-weighted") {
    auto r1 = sad::build_scoring_regions(tl({{40000, 50000}}), {0, 100000});
    sad::Score a = sad::score(r1, tl({{38000, 53000}}));
    sad::Score b = sad::score(r1, tl({{42000, 47000}}));
    sad::Score pooled = sad::pool({a, b});
    CHECK(pooled.fp == a.fp + b.fp);
    CHECK(pooled.fn == a.fn + b.fn);
    CHECK(pooled.p_fn == Rational(5000, 20000));
    CHECK(pooled.p_fp == Rational(4000, 178000));
}

namespace {

std::vector<SadRecord> records_for(const std::vector<std::pair<Interval, double>>& sp) {
    std::vector<SadRecord> out;
    for (const auto& [iv, conf] : sp) {
        SadRecord r;
        r.file_id = "f";
        r.span = iv;
        r.kind = SadKind::speech;
        r.confidence = conf;
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("sweep worked example") {
    auto regions = sad::build_scoring_regions(tl({{40000, 50000}}), {0, 100000});
    auto sweep = sad::sweep_dcf(
        regions, records_for({{{40000, 50000}, 0.9}, {{70000, 75000}, 0.4}}));
    CHECK(sweep.theta_star == 0.9);
    CHECK(sweep.best.dcf == Rational::zero());
    bool saw_low = false;
    for (const auto& point : sweep.curve) {
        if (point.theta == 0.4) {
            saw_low = true;
            CHECK(point.score.dcf == Rational(5, 4 * 89));
        }
    }
    CHECK(saw_low);
}

TEST_CASE("sweep ties go to the larger threshold") {
    auto regions = sad::build_scoring_regions(tl({{40000, 50000}}), {0, 100000});
    auto sweep = sad::sweep_dcf(
        regions, records_for({{{40000, 50000}, 0.3}, {{40000, 50000}, 0.8}}));
    CHECK(sweep.theta_star == 0.8);
    CHECK(sweep.best.dcf == Rational::zero());
}

TEST_CASE("sweep sentinel keeps nothing") {
    auto regions = sad::build_scoring_regions(tl({}), {0, 100000});
    auto sweep = sad::sweep_dcf(regions, records_for({{{10000, 20000}, 0.2}}));
    CHECK(sweep.theta_star > 0.2);
    CHECK(sweep.best.dcf == Rational::zero());
}

TEST_CASE("sweep requires confidences") {
    auto regions = sad::build_scoring_regions(tl({{40000, 50000}}), {0, 100000});
    SadRecord bare;
    bare.span = {40000, 50000};
    bare.kind = SadKind::speech;
    CHECK_THROWS_AS(sad::sweep_dcf(regions, {bare}), FormatError);
}

TEST_CASE("threshold monotonicity") {
    Prng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Tick span = 100000;
        Timeline ref = random_speech(rng, span, 10);
        auto regions = sad::build_scoring_regions(ref, {0, span});
        std::vector<std::pair<Interval, double>> sp;
        Tick at = 0;
        for (int i = 0; i < 8 && at < span - 2000; ++i) {
            Tick a = at + static_cast<Tick>(rng.below(3000));
            Tick b = a + 500 + static_cast<Tick>(rng.below(8000));
            if (b > span) break;
            sp.push_back({{a, b}, static_cast<double>(rng.below(100)) / 100.0});
            at = b + 1;
        }
        if (sp.empty()) continue;
        auto sweep = sad::sweep_dcf(regions, records_for(sp));
        for (std::size_t i = 1; i < sweep.curve.size(); ++i) {
            CHECK(sweep.curve[i].theta > sweep.curve[i - 1].theta);
            CHECK(sweep.curve[i].score.fp <= sweep.curve[i - 1].score.fp);
            CHECK(sweep.curve[i].score.fn >= sweep.curve[i - 1].score.fn);
        }
        for (const auto& point : sweep.curve)
            CHECK(sweep.best.dcf <= point.score.dcf);
    }
}
