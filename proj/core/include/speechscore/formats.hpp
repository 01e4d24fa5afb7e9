#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "speechscore/time.hpp"

namespace speechscore {

// Parse/validation failure with (file, line, field) provenance.
class FormatError : public std::runtime_error {
public:
    FormatError(std::string file, int line, std::string field, const std::string& what)
        : std::runtime_error(describe(file, line, field, what)),
          file_(std::move(file)), line_(line), field_(std::move(field)) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    static std::string describe(const std::string& file, int line,
                                const std::string& field, const std::string& what);
    std::string file_;
    int line_;
    std::string field_;
};

// One RTTM speaker turn. The constant fields (Type, Orthography,
// Speaker Type, Confidence) are validated on parse and re-emitted as
// literals on serialize, so only the variable fields are stored.
struct RttmTurn {
    std::string file_id;
    Tick onset = 0;
    Tick dur = 0;
    std::string speaker;

    Interval span() const { return {onset, onset + dur}; }
    bool operator==(const RttmTurn&) const = default;
};

struct UemRegion {
    std::string file_id;
    int channel_id = 1;
    Interval span;

    bool operator==(const UemRegion&) const = default;
};

enum class SadKind { speech, nonspeech };

enum class SadMode { reference, system };  // "S"/"NS" vs "speech"/"non-speech"

struct SadRecord {
    std::string test = "X";
    std::string testset_id = "X";
    std::string test_id = "X";
    std::string file_id = "X";
    Interval span;
    SadKind kind = SadKind::speech;
    std::optional<double> confidence;

    bool operator==(const SadRecord&) const = default;
};

struct SidPrediction {
    std::string segment_id;
    std::array<std::string, 5> predictions;  // most- to least-likely

    bool operator==(const SidPrediction&) const = default;
};

enum class Sentiment { positive, neutral, negative };

const char* to_string(Sentiment s);

struct TranscriptUtterance {
    std::string speaker_id;
    std::string words;
    Sentiment sentiment = Sentiment::neutral;
    Interval span;

    bool operator==(const TranscriptUtterance&) const = default;
};

struct HardwareInfo {
    int cpu_cores = 0;
    std::string cpu_model;
    int gpu_count = 0;
    std::string gpu_model;
    std::string ram;
    std::string disk;
    std::string frameworks;
    std::string runtime_per_30min_file;
};

struct SystemDescription {
    std::string task;  // SAD | SD | SID | ASR | SENTIMENT
    std::string abstract;
    std::string data_resources;
    std::string algorithm;
    HardwareInfo hardware;
};

// "UNK" is legal in reference files (excluded downstream) but illegal
// in system RTTM output.
inline constexpr const char* kUnknownSpeaker = "UNK";

struct ParseOptions {
    std::string source_name = "<input>";  // used in error provenance
    // When set, RTTM turns whose File ID differs are dropped with a
    // warning instead of failing the whole file.
    std::optional<std::string> expected_file_id;
    bool system_output = false;  // rejects the reserved UNK speaker label
    std::vector<std::string>* warnings = nullptr;
};

std::vector<RttmTurn> parse_rttm(std::string_view text, const ParseOptions& opts = {});
std::vector<UemRegion> parse_uem(std::string_view text, const ParseOptions& opts = {});
std::vector<SadRecord> parse_sad(std::string_view text, SadMode mode,
                                 const ParseOptions& opts = {});
std::vector<SidPrediction> parse_sid_output(std::string_view text,
                                            const ParseOptions& opts = {});
std::vector<TranscriptUtterance> parse_transcript(std::string_view text,
                                                  const ParseOptions& opts = {});
SystemDescription parse_system_description(std::string_view text,
                                           const ParseOptions& opts = {});

std::string serialize_rttm(const std::vector<RttmTurn>& turns);
std::string serialize_uem(const std::vector<UemRegion>& regions);
std::string serialize_sad(const std::vector<SadRecord>& records, SadMode mode);
std::string serialize_sid_output(const std::vector<SidPrediction>& predictions);
std::string serialize_transcript(const std::vector<TranscriptUtterance>& utterances);
std::string serialize_system_description(const SystemDescription& description);

enum class Split { dev, eval };

// Dev segment names embed the speaker ("FS_P01_dev_<Speaker>_<Utt>");
// eval names ("FS_P01_eval_<Utt>") carry none. `name` is a basename
// without extension.
std::optional<std::string> ref_label_from_filename(std::string_view name, Split split);

}  // namespace speechscore
