#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "speechscore/formats.hpp"
#include "speechscore/time.hpp"

namespace speechscore::fixtures {

enum class ChannelPreset { EECOM, FD, GNC, MOCR, NTWK };

const char* to_string(ChannelPreset preset);
std::optional<ChannelPreset> preset_from_string(std::string_view name);

struct PlantedRates {
    double p_miss = 0.0;
    double p_fa = 0.0;
    double speaker_confusion = 0.0;
    double wer_target = 0.0;
    double sentiment_flip = 0.0;
};

struct FixtureSpec {
    std::uint64_t seed = 1;
    Interval file_span = {0, 31 * 60 * 1000};  // 31 min default
    int n_speakers = 8;
    double turn_dur_mean = 10.0;  // seconds
    double turn_dur_std = 3.0;
    std::optional<ChannelPreset> channel_preset;  // overrides the three above
    int n_sid_trials = 0;
    Split sid_split = Split::dev;
    PlantedRates planted;
    std::string file_id = "FS_P01_dev_001";
};

// Per-channel speaker statistics used when a preset is selected.
struct PresetStats {
    int n_speakers;
    double turn_dur_mean;
    double turn_dur_std;
    double snr_mean;
};
PresetStats preset_stats(ChannelPreset preset);

// Mutually consistent reference-side bundle: RTTM turns, transcript
// utterances with identical spans, SAD reference covering the full
// span, a whole-span UEM, and SID trials with their key.
struct ReferenceBundle {
    std::string file_id;
    Interval file_span;
    std::vector<RttmTurn> rttm;
    std::vector<UemRegion> uem;
    std::vector<SadRecord> sad;
    std::vector<TranscriptUtterance> transcript;
    std::vector<std::pair<std::string, std::string>> sid_key;  // segment -> speaker
    std::vector<std::string> speakers;
};

struct SystemBundle {
    std::vector<SadRecord> sad;              // carries confidences
    std::vector<RttmTurn> rttm;
    std::vector<SidPrediction> sid;
    std::vector<TranscriptUtterance> transcript;  // word edits + polarity flips
};

// Deterministic function of spec.seed; throws std::invalid_argument
// when the requested speech cannot fit the span.
ReferenceBundle gen_reference(const FixtureSpec& spec);

SystemBundle perturb_system(const ReferenceBundle& bundle, const PlantedRates& rates,
                            std::uint64_t seed);

// Bundle metadata (seed, preset, span, declared audio properties,
// difficulty tier). JSON text.
std::string manifest(const FixtureSpec& spec, const ReferenceBundle& bundle);

}  // namespace speechscore::fixtures
