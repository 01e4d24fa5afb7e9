#include "speechscore/sad.hpp"

#include <algorithm>
#include <stdexcept>

namespace speechscore::sad {

ScoringRegions build_scoring_regions(const Timeline& reference_speech,
                                     Interval file_span) {
    Timeline span = Timeline::normalize({file_span});
    if (subtract(reference_speech, span).duration() > 0)
        throw std::invalid_argument("reference speech extends outside the file span");

    std::vector<Interval> raw_collars;
    for (const Interval& seg : reference_speech.intervals()) {
        raw_collars.push_back({std::max<Tick>(seg.onset - kCollar, file_span.onset),
                               seg.onset});
        raw_collars.push_back({seg.offset,
                               std::min<Tick>(seg.offset + kCollar, file_span.offset)});
    }
    // Collar minus reference speech: annotated speech is always scored.
    Timeline collars =
        subtract(intersect(Timeline::normalize(std::move(raw_collars)), span),
                 reference_speech);

    Timeline candidate = subtract(subtract(span, reference_speech), collars);
    std::vector<Interval> nonspeech;
    std::vector<Interval> absorbed = collars.intervals();
    for (const Interval& iv : candidate.intervals()) {
        if (iv.length() < kMinNonspeech) absorbed.push_back(iv);
        else nonspeech.push_back(iv);
    }

    ScoringRegions regions;
    regions.scored_speech = reference_speech;
    regions.scored_nonspeech = Timeline::normalize(std::move(nonspeech));
    regions.collars = Timeline::normalize(std::move(absorbed));
    regions.file_span = file_span;
    return regions;
}

Score score(const ScoringRegions& regions, const Timeline& system_speech) {
    Timeline sys = intersect(system_speech, Timeline::normalize({regions.file_span}));

    Score s;
    s.tp = intersect(sys, regions.scored_speech).duration();
    s.fn = subtract(regions.scored_speech, sys).duration();
    s.fp = intersect(sys, regions.scored_nonspeech).duration();
    s.tn = subtract(regions.scored_nonspeech, sys).duration();

    Tick speech = s.tp + s.fn;
    Tick nonspeech = s.tn + s.fp;
    s.degenerate = (speech == 0 || nonspeech == 0);
    s.p_fn = speech > 0 ? Rational(s.fn, speech) : Rational::zero();
    s.p_fp = nonspeech > 0 ? Rational(s.fp, nonspeech) : Rational::zero();
    s.dcf = Rational(3, 4) * s.p_fn + Rational(1, 4) * s.p_fp;
    return s;
}

Score pool(const std::vector<Score>& scores) {
    Score total;
    for (const Score& s : scores) {
        total.tp += s.tp;
        total.tn += s.tn;
        total.fp += s.fp;
        total.fn += s.fn;
    }
    Tick speech = total.tp + total.fn;
    Tick nonspeech = total.tn + total.fp;
    total.degenerate = (speech == 0 || nonspeech == 0);
    total.p_fn = speech > 0 ? Rational(total.fn, speech) : Rational::zero();
    total.p_fp = nonspeech > 0 ? Rational(total.fp, nonspeech) : Rational::zero();
    total.dcf = Rational(3, 4) * total.p_fn + Rational(1, 4) * total.p_fp;
    return total;
}

SweepResult sweep_dcf(const ScoringRegions& regions,
                      const std::vector<SadRecord>& records) {
    std::vector<std::pair<double, Interval>> speech;
    for (const SadRecord& rec : records) {
        if (rec.kind != SadKind::speech) continue;
        if (!rec.confidence)
            throw FormatError("<sad system output>", 0, "Confidence Score",
                              "speech record without confidence; threshold sweep "
                              "is impossible");
        speech.push_back({*rec.confidence, rec.span});
    }

    std::vector<double> thetas;
    for (const auto& [conf, span] : speech) thetas.push_back(conf);
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
    double sentinel = thetas.empty() ? 1.0 : thetas.back() + 1.0;
    thetas.push_back(sentinel);  // keep nothing

    SweepResult result;
    result.theta_star = sentinel;
    bool first = true;
    for (double theta : thetas) {
        std::vector<Interval> kept;
        for (const auto& [conf, span] : speech)
            if (conf >= theta) kept.push_back(span);
        Score s = score(regions, Timeline::normalize(std::move(kept)));
        // ties go to the larger theta; thetas ascend, so <= replaces
        if (first || s.dcf <= result.best.dcf) {
            result.best = s;
            result.theta_star = theta;
            first = false;
        }
        result.curve.push_back({theta, std::move(s)});
    }
    return result;
}

}  // namespace speechscore::sad
