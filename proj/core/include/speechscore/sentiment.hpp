#pragma once

#include <array>
#include <vector>

#include "speechscore/formats.hpp"
#include "speechscore/rational.hpp"
#include "speechscore/time.hpp"

namespace speechscore::sentiment {

inline constexpr Tick kFrameSize = 10;           // 10 ms scoring grid
inline constexpr Tick kForgivenessCollar = 2000; // 2 s
inline constexpr Tick kSameSpeakerGap = 1000;    // <= 1 s merges

// One scored 10 ms frame and its reference polarity.
struct Frame {
    Tick onset;  // multiple of kFrameSize
    Sentiment reference;
};

struct FrameSet {
    Timeline scored_frames;     // union of the frames, canonical
    std::vector<Frame> frames;  // sorted by onset
};

struct Score {
    Tick tp_time = 0;
    Tick scored_speech_time = 0;
    Tick uncovered_time = 0;  // scored frames with no system label
    Rational accuracy;
    // confusion[ref][sys] in ticks, indexed by Sentiment order
    std::array<std::array<Tick, 3>, 3> confusion{};
    int conflicting_system_labels = 0;  // frames with >= 2 polarities at midpoint
};

// Merges same-speaker utterances across gaps <= 1 s, drops [unk]-only
// utterances and regions where two speakers overlap, carves 2 s collars
// around the merged boundaries, and snaps what remains to the 10 ms
// grid. Frames whose midpoint is not covered by a reference utterance
// (a merged-away gap) are dropped.
FrameSet build_frames(const std::vector<TranscriptUtterance>& reference,
                      Tick collar = kForgivenessCollar);

// A frame is TP iff a system utterance covering its midpoint carries
// the reference polarity; conflicts resolve to the latest start time.
Score score(const FrameSet& frames, const std::vector<TranscriptUtterance>& system);

Score pool(const std::vector<Score>& scores);

}  // namespace speechscore::sentiment
