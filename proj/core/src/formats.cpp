#include "speechscore/formats.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

namespace speechscore {

namespace {

using nlohmann::json;

struct Line {
    int number;  // 1-based
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    int n = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++n;
        if (!line.empty()) lines.push_back({n, line});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

Tick require_seconds(std::string_view token, const ParseOptions& opts, int line,
                     const char* field) {
    auto t = parse_seconds(token);
    if (!t)
        throw FormatError(opts.source_name, line, field,
                          "bad time value '" + std::string(token) +
                              "' (expected seconds with <= 3 decimals)");
    return *t;
}

void warn(const ParseOptions& opts, const std::string& message) {
    if (opts.warnings) opts.warnings->push_back(message);
}

}  // namespace

std::string FormatError::describe(const std::string& file, int line,
                                  const std::string& field,
                                  const std::string& what) {
    std::ostringstream os;
    os << file << ":" << line << ": field '" << field << "': " << what;
    return os.str();
}

const char* to_string(Sentiment s) {
    switch (s) {
        case Sentiment::positive: return "POSITIVE";
        case Sentiment::neutral: return "NEUTRAL";
        case Sentiment::negative: return "NEGATIVE";
    }
    return "?";
}

std::vector<RttmTurn> parse_rttm(std::string_view text, const ParseOptions& opts) {
    std::vector<RttmTurn> turns;
    for (const Line& line : split_lines(text)) {
        auto f = split_ws(line.text);
        if (f.size() != 8 && f.size() != 9)
            throw FormatError(opts.source_name, line.number, "line",
                              "expected 9 space-delimited fields, got " +
                                  std::to_string(f.size()));
        if (f[0] != "SPEAKER")
            throw FormatError(opts.source_name, line.number, "Type",
                              "type must be SPEAKER, got '" + std::string(f[0]) + "'");
        if (f[2] != "1")
            throw FormatError(opts.source_name, line.number, "Channel ID",
                              "channel must be 1");
        if (f[5] != "<NA>")
            throw FormatError(opts.source_name, line.number, "Orthography Field",
                              "must be <NA>");
        if (f[6] != "<NA>")
            throw FormatError(opts.source_name, line.number, "Speaker Type",
                              "must be <NA>");
        if (f.size() == 9 && f[8] != "<NA>")
            throw FormatError(opts.source_name, line.number, "Confidence Score",
                              "must be <NA> when present");
        if (f[7].empty())
            throw FormatError(opts.source_name, line.number, "Speaker Name",
                              "must be non-empty");

        RttmTurn turn;
        turn.file_id = std::string(f[1]);
        turn.onset = require_seconds(f[3], opts, line.number, "Turn Onset");
        turn.dur = require_seconds(f[4], opts, line.number, "Turn Duration");
        turn.speaker = std::string(f[7]);

        if (opts.system_output && turn.speaker == kUnknownSpeaker)
            throw FormatError(opts.source_name, line.number, "Speaker Name",
                              "label UNK is reserved for reference files");
        if (opts.expected_file_id && turn.file_id != *opts.expected_file_id) {
            warn(opts, opts.source_name + ":" + std::to_string(line.number) +
                           ": File ID '" + turn.file_id + "' does not match '" +
                           *opts.expected_file_id + "'; turn dropped");
            continue;
        }
        turns.push_back(std::move(turn));
    }
    return turns;
}

std::vector<UemRegion> parse_uem(std::string_view text, const ParseOptions& opts) {
    std::vector<UemRegion> regions;
    std::map<std::string, std::vector<std::pair<Interval, int>>> per_file;
    for (const Line& line : split_lines(text)) {
        auto f = split_ws(line.text);
        if (f.size() != 4)
            throw FormatError(opts.source_name, line.number, "line",
                              "expected 4 space-delimited fields, got " +
                                  std::to_string(f.size()));
        UemRegion region;
        region.file_id = std::string(f[0]);
        try {
            region.channel_id = std::stoi(std::string(f[1]));
        } catch (const std::exception&) {
            throw FormatError(opts.source_name, line.number, "Channel ID",
                              "not an integer");
        }
        region.span.onset = require_seconds(f[2], opts, line.number, "Onset");
        region.span.offset = require_seconds(f[3], opts, line.number, "Offset");
        if (region.span.onset >= region.span.offset)
            throw FormatError(opts.source_name, line.number, "Onset",
                              "reversed or empty region [" +
                                  format_seconds(region.span.onset) + ", " +
                                  format_seconds(region.span.offset) + ")");
        per_file[region.file_id].push_back({region.span, line.number});
        regions.push_back(std::move(region));
    }
    for (auto& [file_id, spans] : per_file) {
        std::sort(spans.begin(), spans.end(),
                  [](const auto& a, const auto& b) { return a.first.onset < b.first.onset; });
        for (std::size_t i = 1; i < spans.size(); ++i) {
            if (spans[i].first.onset < spans[i - 1].first.offset)
                throw FormatError(opts.source_name, spans[i].second, "Onset",
                                  "scoring regions overlap (lines " +
                                      std::to_string(spans[i - 1].second) + " and " +
                                      std::to_string(spans[i].second) + ") in file " +
                                      file_id);
        }
    }
    return regions;
}

std::vector<SadRecord> parse_sad(std::string_view text, SadMode mode,
                                 const ParseOptions& opts) {
    std::vector<SadRecord> records;
    std::map<std::string, std::vector<std::pair<Interval, int>>> per_file;
    for (const Line& line : split_lines(text)) {
        auto f = split_tabs(line.text);
        if (f.size() < 8) {
            f = split_ws(line.text);
            if (f.size() == 8 || f.size() == 9)
                warn(opts, opts.source_name + ":" + std::to_string(line.number) +
                               ": fields are space-delimited, expected tabs");
        }
        if (f.size() != 8 && f.size() != 9)
            throw FormatError(opts.source_name, line.number, "line",
                              "expected 9 tab-delimited fields, got " +
                                  std::to_string(f.size()));
        if (f[3] != "SAD")
            throw FormatError(opts.source_name, line.number, "Task",
                              "task must be SAD, got '" + std::string(f[3]) + "'");
        SadRecord rec;
        rec.test = std::string(f[0]);
        rec.testset_id = std::string(f[1]);
        rec.test_id = std::string(f[2]);
        rec.file_id = std::string(f[4]);
        rec.span.onset = require_seconds(f[5], opts, line.number, "Interval start");
        rec.span.offset = require_seconds(f[6], opts, line.number, "Interval end");
        if (rec.span.onset > rec.span.offset)
            throw FormatError(opts.source_name, line.number, "Interval start",
                              "interval start exceeds end");
        std::string_view kind = f[7];
        if (mode == SadMode::reference) {
            if (kind == "S") rec.kind = SadKind::speech;
            else if (kind == "NS") rec.kind = SadKind::nonspeech;
            else
                throw FormatError(opts.source_name, line.number, "Type",
                                  "expected S or NS, got '" + std::string(kind) + "'");
        } else {
            if (kind == "speech") rec.kind = SadKind::speech;
            else if (kind == "non-speech") rec.kind = SadKind::nonspeech;
            else
                throw FormatError(opts.source_name, line.number, "Type",
                                  "expected speech or non-speech, got '" +
                                      std::string(kind) + "'");
        }
        if (f.size() == 9 && !f[8].empty()) {
            double conf;
            try {
                conf = std::stod(std::string(f[8]));
            } catch (const std::exception&) {
                throw FormatError(opts.source_name, line.number, "Confidence Score",
                                  "not a number");
            }
            if (conf < 0.0 || conf > 1.0)
                throw FormatError(opts.source_name, line.number, "Confidence Score",
                                  "must be within [0, 1]");
            rec.confidence = conf;
        }
        per_file[rec.file_id].push_back({rec.span, line.number});
        records.push_back(std::move(rec));
    }
    for (auto& [file_id, spans] : per_file) {
        std::sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) {
            if (a.first.onset != b.first.onset) return a.first.onset < b.first.onset;
            return a.second < b.second;
        });
        for (std::size_t i = 1; i < spans.size(); ++i) {
            if (spans[i].first.onset < spans[i - 1].first.offset)
                throw FormatError(
                    opts.source_name, spans[i].second, "Interval start",
                    "interval [" + format_seconds(spans[i].first.onset) + ", " +
                        format_seconds(spans[i].first.offset) + ") overlaps [" +
                        format_seconds(spans[i - 1].first.onset) + ", " +
                        format_seconds(spans[i - 1].first.offset) + ") (lines " +
                        std::to_string(spans[i - 1].second) + " and " +
                        std::to_string(spans[i].second) + ")");
        }
    }
    return records;
}

std::vector<SidPrediction> parse_sid_output(std::string_view text,
                                            const ParseOptions& opts) {
    std::vector<SidPrediction> predictions;
    for (const Line& line : split_lines(text)) {
        auto f = split_ws(line.text);
        if (f.size() != 6)
            throw FormatError(opts.source_name, line.number, "line",
                              "expected a segment id plus 5 predictions, got " +
                                  std::to_string(f.size()) + " tokens");
        SidPrediction p;
        p.segment_id = std::string(f[0]);
        for (int i = 0; i < 5; ++i) p.predictions[i] = std::string(f[i + 1]);
        auto sorted = p.predictions;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw FormatError(opts.source_name, line.number, "Predictions",
                              "duplicate speaker label among the 5 predictions");
        predictions.push_back(std::move(p));
    }
    return predictions;
}

namespace {

Tick transcript_time(const json& obj, const char* canonical, const char* typo,
                     const ParseOptions& opts) {
    const json* v = nullptr;
    if (obj.contains(canonical)) v = &obj.at(canonical);
    else if (typo && obj.contains(typo)) v = &obj.at(typo);
    if (!v)
        throw FormatError(opts.source_name, 0, canonical, "missing required key");
    std::string token = v->is_string() ? v->get<std::string>() : v->dump();
    auto t = parse_seconds(token);
    if (!t)
        throw FormatError(opts.source_name, 0, canonical,
                          "bad time value '" + token + "'");
    return *t;
}

}  // namespace

std::vector<TranscriptUtterance> parse_transcript(std::string_view text,
                                                  const ParseOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(opts.source_name, 0, "json", e.what());
    }
    if (!doc.is_array())
        throw FormatError(opts.source_name, 0, "json",
                          "expected a JSON array of utterances");
    std::vector<TranscriptUtterance> utterances;
    for (const json& obj : doc) {
        if (!obj.is_object())
            throw FormatError(opts.source_name, 0, "json", "utterance is not an object");
        TranscriptUtterance u;
        for (const char* key : {"speakerID", "words", "sentiment"})
            if (!obj.contains(key))
                throw FormatError(opts.source_name, 0, key, "missing required key");
        u.speaker_id = obj.at("speakerID").get<std::string>();
        u.words = obj.at("words").get<std::string>();
        std::string sentiment = obj.at("sentiment").get<std::string>();
        if (sentiment == "POSITIVE") u.sentiment = Sentiment::positive;
        else if (sentiment == "NEUTRAL") u.sentiment = Sentiment::neutral;
        else if (sentiment == "NEGATIVE") u.sentiment = Sentiment::negative;
        else
            throw FormatError(opts.source_name, 0, "sentiment",
                              "'" + sentiment +
                                  "' is not one of POSITIVE/NEUTRAL/NEGATIVE");
        // The documented example spells the key "startTIme"; accept both.
        u.span.onset = transcript_time(obj, "startTime", "startTIme", opts);
        u.span.offset = transcript_time(obj, "endTime", nullptr, opts);
        if (u.span.onset > u.span.offset)
            throw FormatError(opts.source_name, 0, "startTime",
                              "utterance start exceeds end");
        utterances.push_back(std::move(u));
    }
    return utterances;
}

SystemDescription parse_system_description(std::string_view text,
                                           const ParseOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(opts.source_name, 0, "json", e.what());
    }
    auto require_string = [&](const json& obj, const char* key, const char* section) {
        if (!obj.contains(key) || !obj.at(key).is_string() ||
            obj.at(key).get<std::string>().empty())
            throw FormatError(opts.source_name, 0, section,
                              std::string("missing or empty field '") + key + "'");
        return obj.at(key).get<std::string>();
    };
    auto require_int = [&](const json& obj, const char* key, const char* section) {
        if (!obj.contains(key) || !obj.at(key).is_number_integer())
            throw FormatError(opts.source_name, 0, section,
                              std::string("missing or non-integer field '") + key + "'");
        return obj.at(key).get<int>();
    };

    SystemDescription d;
    d.task = require_string(doc, "task", "Task");
    static const char* kTasks[] = {"SAD", "SD", "SID", "ASR", "SENTIMENT"};
    if (std::find(std::begin(kTasks), std::end(kTasks), d.task) == std::end(kTasks))
        throw FormatError(opts.source_name, 0, "Task",
                          "'" + d.task + "' is not a challenge task");
    d.abstract = require_string(doc, "abstract", "Abstract");
    d.data_resources = require_string(doc, "data_resources", "Data resources");
    d.algorithm = require_string(doc, "algorithm", "Detailed description of algorithm");
    if (!doc.contains("hardware") || !doc.at("hardware").is_object())
        throw FormatError(opts.source_name, 0, "Hardware requirements",
                          "missing 'hardware' section");
    const json& hw = doc.at("hardware");
    d.hardware.cpu_cores = require_int(hw, "cpu_cores", "Hardware requirements");
    d.hardware.cpu_model = require_string(hw, "cpu_model", "Hardware requirements");
    d.hardware.gpu_count = require_int(hw, "gpu_count", "Hardware requirements");
    d.hardware.gpu_model = require_string(hw, "gpu_model", "Hardware requirements");
    d.hardware.ram = require_string(hw, "ram", "Hardware requirements");
    d.hardware.disk = require_string(hw, "disk", "Hardware requirements");
    d.hardware.frameworks = require_string(hw, "frameworks", "Hardware requirements");
    d.hardware.runtime_per_30min_file =
        require_string(hw, "runtime_per_30min_file", "Hardware requirements");
    return d;
}

std::string serialize_rttm(const std::vector<RttmTurn>& turns) {
    std::string out;
    for (const RttmTurn& t : turns) {
        out += "SPEAKER " + t.file_id + " 1 " + format_seconds(t.onset) + " " +
               format_seconds(t.dur) + " <NA> <NA> " + t.speaker + " <NA>\n";
    }
    return out;
}

std::string serialize_uem(const std::vector<UemRegion>& regions) {
    std::string out;
    for (const UemRegion& r : regions) {
        out += r.file_id + " " + std::to_string(r.channel_id) + " " +
               format_seconds(r.span.onset) + " " + format_seconds(r.span.offset) + "\n";
    }
    return out;
}

std::string serialize_sad(const std::vector<SadRecord>& records, SadMode mode) {
    std::string out;
    for (const SadRecord& r : records) {
        const char* kind = (mode == SadMode::reference)
                               ? (r.kind == SadKind::speech ? "S" : "NS")
                               : (r.kind == SadKind::speech ? "speech" : "non-speech");
        out += r.test + "\t" + r.testset_id + "\t" + r.test_id + "\tSAD\t" +
               r.file_id + "\t" + format_seconds(r.span.onset) + "\t" +
               format_seconds(r.span.offset) + "\t" + kind;
        if (r.confidence) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", *r.confidence);
            out += std::string("\t") + buf;
        }
        out += "\n";
    }
    return out;
}

std::string serialize_sid_output(const std::vector<SidPrediction>& predictions) {
    std::string out;
    for (const SidPrediction& p : predictions) {
        out += p.segment_id;
        for (const std::string& label : p.predictions) out += " " + label;
        out += "\n";
    }
    return out;
}

std::string serialize_transcript(const std::vector<TranscriptUtterance>& utterances) {
    json arr = json::array();
    for (const TranscriptUtterance& u : utterances) {
        json obj;
        obj["speakerID"] = u.speaker_id;
        obj["words"] = u.words;
        obj["sentiment"] = to_string(u.sentiment);
        obj["startTime"] = format_seconds(u.span.onset);
        obj["endTime"] = format_seconds(u.span.offset);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string serialize_system_description(const SystemDescription& d) {
    json doc;
    doc["task"] = d.task;
    doc["abstract"] = d.abstract;
    doc["data_resources"] = d.data_resources;
    doc["algorithm"] = d.algorithm;
    doc["hardware"] = {
        {"cpu_cores", d.hardware.cpu_cores},
        {"cpu_model", d.hardware.cpu_model},
        {"gpu_count", d.hardware.gpu_count},
        {"gpu_model", d.hardware.gpu_model},
        {"ram", d.hardware.ram},
        {"disk", d.hardware.disk},
        {"frameworks", d.hardware.frameworks},
        {"runtime_per_30min_file", d.hardware.runtime_per_30min_file},
    };
    return doc.dump(2) + "\n";
}

std::optional<std::string> ref_label_from_filename(std::string_view name, Split split) {
    constexpr std::string_view kDevPrefix = "FS_P01_dev_";
    constexpr std::string_view kEvalPrefix = "FS_P01_eval_";
    if (split == Split::dev && name.starts_with(kDevPrefix)) {
        std::string_view rest = name.substr(kDevPrefix.size());
        std::size_t sep = rest.rfind('_');
        if (sep != std::string_view::npos && sep > 0 && sep + 1 < rest.size())
            return std::string(rest.substr(0, sep));
    }
    if (split == Split::eval && name.starts_with(kEvalPrefix) &&
        name.size() > kEvalPrefix.size())
        return std::nullopt;
    throw FormatError(std::string(name), 0, "file name",
                      "does not match the segment naming convention");
}

}  // namespace speechscore
