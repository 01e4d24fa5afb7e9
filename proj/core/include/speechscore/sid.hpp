#pragma once

#include <string>
#include <vector>

#include "speechscore/formats.hpp"
#include "speechscore/rational.hpp"

namespace speechscore::sid {

struct Trial {
    std::string segment_id;
    std::string reference_label;
    std::optional<SidPrediction> prediction;  // absent counts as a miss
};

struct TrialResult {
    std::string segment_id;
    bool hit = false;
    bool missing_prediction = false;
};

struct Score {
    int total = 0;  // M
    int hits = 0;   // |S|
    Rational accuracy;
    std::vector<TrialResult> per_trial;
};

// A trial is a hit when its reference label is among the 5 predictions
// (membership, not rank). Throws FormatError on duplicate segment ids.
Score score_top5(const std::vector<Trial>& trials);

// Joins the trial list (segment id -> reference label) with system
// predictions; predictions without a listed trial are ignored with a
// warning appended to `extra_predictions`.
std::vector<Trial> build_trials(
    const std::vector<std::pair<std::string, std::string>>& references,
    const std::vector<SidPrediction>& predictions,
    std::vector<std::string>* extra_predictions = nullptr);

// Two whitespace-delimited columns: segment_id, speaker label. Used for
// eval segments whose file names carry no speaker.
std::vector<std::pair<std::string, std::string>> parse_key_file(
    std::string_view text, const ParseOptions& opts = {});

std::string serialize_key_file(
    const std::vector<std::pair<std::string, std::string>>& keys);

}  // namespace speechscore::sid
