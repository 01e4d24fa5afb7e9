#pragma once

#include <map>
#include <string>
#include <vector>

#include "speechscore/formats.hpp"
#include "speechscore/rational.hpp"
#include "speechscore/time.hpp"

namespace speechscore::diar {

inline constexpr Tick kForgivenessCollar = 250;  // 0.25 s
inline constexpr Tick kSameSpeakerGap = 1000;    // <= 1 s merges

// Reference prepared for scoring: UNK and overlap regions excluded,
// same-speaker turns merged, forgiveness collars carved out. Inside
// scoring_regions at most one reference speaker is ever active.
struct Reference {
    std::vector<LabeledSegment> turns;  // merged, UNK removed
    Timeline scoring_regions;
    Timeline excluded;
    bool empty_after_preparation = false;
};

struct SpeakerMapping {
    std::vector<std::string> reference_speakers;  // sorted
    std::vector<std::string> system_speakers;     // sorted
    std::vector<std::vector<Tick>> overlap;       // reference x system
    std::map<std::string, std::string> pairs;     // injective both ways
    Tick mapped_overlap = 0;
};

struct Score {
    Tick fa = 0;
    Tick miss = 0;
    Tick error = 0;
    Tick total = 0;
    Rational der;
    bool unscorable = false;  // total == 0
};

// `uem` empty means the full span [0, last reference/system offset).
// `span_hint` extends that fallback span (e.g. to the audio length).
Reference prepare_reference(const std::vector<RttmTurn>& turns,
                            const std::vector<UemRegion>& uem,
                            Tick collar = kForgivenessCollar,
                            Tick span_hint = 0);

// Overlap matrix over scoring regions, then a maximum one-to-one map.
// Among optimal maps the lexicographically smallest (reference label,
// system label) pair sequence wins, so results are reproducible.
SpeakerMapping map_speakers(const Reference& ref,
                            const std::vector<RttmTurn>& system_turns);

Score score(const Reference& ref, const std::vector<RttmTurn>& system_turns,
            const SpeakerMapping& mapping);

// Supplementary corpus-level pooling of per-file tick counts.
Score pool(const std::vector<Score>& scores);

}  // namespace speechscore::diar
