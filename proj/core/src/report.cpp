#include "speechscore/report.hpp"

#include <cstdio>

namespace speechscore::report {

using nlohmann::json;

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json to_json(const Rational& r) {
    return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.decimal(6)}};
}

json to_json(const sad::Score& s) {
    json out;
    out["tp_ms"] = s.tp;
    out["tn_ms"] = s.tn;
    out["fp_ms"] = s.fp;
    out["fn_ms"] = s.fn;
    out["p_fp"] = to_json(s.p_fp);
    out["p_fn"] = to_json(s.p_fn);
    out["dcf"] = to_json(s.dcf);
    if (s.degenerate) out["degenerate"] = true;
    return out;
}

json to_json(const diar::Score& s) {
    json out;
    out["fa_ms"] = s.fa;
    out["miss_ms"] = s.miss;
    out["error_ms"] = s.error;
    out["total_ms"] = s.total;
    out["der"] = to_json(s.der);
    if (s.unscorable) out["unscorable"] = true;
    return out;
}

json to_json(const sid::Score& s) {
    json out;
    out["segments"] = s.total;
    out["hits"] = s.hits;
    out["accuracy"] = to_json(s.accuracy);
    json misses = json::array();
    for (const sid::TrialResult& t : s.per_trial)
        if (t.missing_prediction) misses.push_back(t.segment_id);
    if (!misses.empty()) out["missing_predictions"] = std::move(misses);
    return out;
}

json to_json(const asr::Score& s) {
    json out;
    out["n_del"] = s.n_del;
    out["n_ins"] = s.n_ins;
    out["n_subst"] = s.n_subst;
    out["n_ref"] = s.n_ref;
    out["wer"] = to_json(s.wer);
    if (s.undefined) out["undefined"] = true;
    return out;
}

json to_json(const sentiment::Score& s) {
    json out;
    out["tp_ms"] = s.tp_time;
    out["scored_speech_ms"] = s.scored_speech_time;
    out["uncovered_ms"] = s.uncovered_time;
    out["accuracy"] = to_json(s.accuracy);
    static const char* kLabels[] = {"POSITIVE", "NEUTRAL", "NEGATIVE"};
    json confusion;
    for (int r = 0; r < 3; ++r) {
        json row;
        for (int y = 0; y < 3; ++y) row[kLabels[y]] = s.confusion[r][y];
        confusion[kLabels[r]] = std::move(row);
    }
    out["confusion_ms"] = std::move(confusion);
    if (s.conflicting_system_labels > 0)
        out["conflicting_system_labels"] = s.conflicting_system_labels;
    // The accuracy denominator is scored speech time after collars and
    // exclusions; a perfect system reaches exactly 1.
    out["denominator"] = "scored_speech_after_exclusions";
    return out;
}

void Builder::add_file(const std::string& file_id, json score,
                       std::vector<std::string> warnings) {
    json entry;
    entry["file_id"] = file_id;
    entry["score"] = std::move(score);
    if (!warnings.empty()) entry["warnings"] = warnings;
    per_file.push_back(std::move(entry));
}

std::string Builder::render() const {
    json doc;
    doc["tool"] = "speechscore";
    doc["tool_version"] = kToolVersion;
    doc["schema_version"] = kSchemaVersion;
    doc["task"] = task;
    json in = json::array();
    for (const InputDigest& i : inputs)
        in.push_back({{"role", i.role}, {"path", i.path}, {"digest", i.digest}});
    doc["inputs"] = std::move(in);
    doc["per_file"] = per_file;
    doc["aggregate"] = aggregate;
    if (!extra.is_null()) doc["extra"] = extra;
    return doc.dump(2) + "\n";
}

}  // namespace speechscore::report
