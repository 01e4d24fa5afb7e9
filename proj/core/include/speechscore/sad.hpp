#pragma once

#include <vector>

#include "speechscore/formats.hpp"
#include "speechscore/rational.hpp"
#include "speechscore/time.hpp"

namespace speechscore::sad {

inline constexpr Tick kCollar = 500;          // 0.5 s buffer zone
inline constexpr Tick kMinNonspeech = 100;    // shorter candidates join the collars

// Partition of a file span into scored speech, scored non-speech and
// unscored collars. The three timelines are pairwise disjoint and
// cover the span exactly; no scored non-speech member is shorter than
// kMinNonspeech.
struct ScoringRegions {
    Timeline scored_speech;
    Timeline scored_nonspeech;
    Timeline collars;
    Interval file_span;
};

struct Score {
    Tick tp = 0;
    Tick tn = 0;
    Tick fp = 0;
    Tick fn = 0;
    Rational p_fp;
    Rational p_fn;
    Rational dcf;
    bool degenerate = false;  // a zero-duration speech or non-speech side
};

// Places 0.5 s collars at each reference speech boundary, clipped to
// the file span. Candidate non-speech shorter than 0.1 s (including
// slivers against the file edges) is absorbed into the collars.
// Reference speech inside another segment's collar stays scored speech.
ScoringRegions build_scoring_regions(const Timeline& reference_speech,
                                     Interval file_span);

Score score(const ScoringRegions& regions, const Timeline& system_speech);

// Pools per-file tick counts, then recomputes the rates time-weighted.
Score pool(const std::vector<Score>& scores);

struct SweepPoint {
    double theta;
    Score score;
};

struct SweepResult {
    double theta_star;
    Score best;
    std::vector<SweepPoint> curve;
};

// Evaluates DCF at every distinct confidence value plus a keep-nothing
// sentinel above the maximum; ties go to the larger threshold.
// Throws FormatError if a speech record lacks a confidence.
SweepResult sweep_dcf(const ScoringRegions& regions,
                      const std::vector<SadRecord>& records);

}  // namespace speechscore::sad
