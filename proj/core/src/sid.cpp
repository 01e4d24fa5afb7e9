#include "speechscore/sid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace speechscore::sid {

Score score_top5(const std::vector<Trial>& trials) {
    std::set<std::string> seen;
    Score s;
    for (const Trial& trial : trials) {
        if (!seen.insert(trial.segment_id).second)
            throw FormatError("<trials>", 0, "segment id",
                              "duplicate segment '" + trial.segment_id + "'");
        TrialResult r;
        r.segment_id = trial.segment_id;
        if (trial.prediction) {
            const auto& preds = trial.prediction->predictions;
            r.hit = std::find(preds.begin(), preds.end(), trial.reference_label) !=
                    preds.end();
        } else {
            r.missing_prediction = true;
        }
        s.total += 1;
        s.hits += r.hit ? 1 : 0;
        s.per_trial.push_back(std::move(r));
    }
    s.accuracy = s.total > 0 ? Rational(s.hits, s.total) : Rational::zero();
    return s;
}

std::vector<Trial> build_trials(
    const std::vector<std::pair<std::string, std::string>>& references,
    const std::vector<SidPrediction>& predictions,
    std::vector<std::string>* extra_predictions) {
    std::map<std::string, const SidPrediction*> by_segment;
    for (const SidPrediction& p : predictions) by_segment[p.segment_id] = &p;

    std::set<std::string> listed;
    std::vector<Trial> trials;
    for (const auto& [segment_id, label] : references) {
        listed.insert(segment_id);
        Trial t;
        t.segment_id = segment_id;
        t.reference_label = label;
        auto it = by_segment.find(segment_id);
        if (it != by_segment.end()) t.prediction = *it->second;
        trials.push_back(std::move(t));
    }
    if (extra_predictions) {
        for (const SidPrediction& p : predictions)
            if (!listed.count(p.segment_id))
                extra_predictions->push_back(p.segment_id);
    }
    return trials;
}

std::vector<std::pair<std::string, std::string>> parse_key_file(
    std::string_view text, const ParseOptions& opts) {
    std::vector<std::pair<std::string, std::string>> keys;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        if (!line.empty()) {
            std::size_t sep = line.find_first_of(" \t");
            std::size_t rest = sep == std::string_view::npos
                                   ? std::string_view::npos
                                   : line.find_first_not_of(" \t", sep);
            if (sep == std::string_view::npos || rest == std::string_view::npos ||
                line.find_first_of(" \t", rest) != std::string_view::npos)
                throw FormatError(opts.source_name, line_no, "line",
                                  "expected two columns: segment id, speaker label");
            keys.emplace_back(std::string(line.substr(0, sep)),
                              std::string(line.substr(rest)));
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return keys;
}

std::string serialize_key_file(
    const std::vector<std::pair<std::string, std::string>>& keys) {
    std::string out;
    for (const auto& [segment_id, label] : keys)
        out += segment_id + " " + label + "\n";
    return out;
}

}  // namespace speechscore::sid
