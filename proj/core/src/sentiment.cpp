#include "speechscore/sentiment.hpp"

#include <algorithm>

#include "speechscore/asr.hpp"

namespace speechscore::sentiment {

namespace {

bool is_unk_only(const TranscriptUtterance& u) {
    asr::TokenSeq tokens = asr::tokenize(u.words);
    return !tokens.empty() &&
           std::all_of(tokens.begin(), tokens.end(),
                       [](const asr::Token& t) { return t.optional_delete; });
}

// Covering utterance with the latest start time, or nullptr. `sorted`
// is ordered by onset; `reach` bounds the longest span in it.
const TranscriptUtterance* covering(
    const std::vector<const TranscriptUtterance*>& sorted, Tick reach, Tick mid,
    int* distinct_polarities = nullptr) {
    auto it = std::upper_bound(sorted.begin(), sorted.end(), mid,
                               [](Tick t, const TranscriptUtterance* u) {
                                   return t < u->span.onset;
                               });
    const TranscriptUtterance* found = nullptr;
    bool seen[3] = {false, false, false};
    int polarities = 0;
    while (it != sorted.begin()) {
        --it;
        const TranscriptUtterance* u = *it;
        if (u->span.onset + reach < mid) break;
        if (u->span.contains(mid)) {
            if (!found) found = u;
            int p = static_cast<int>(u->sentiment);
            if (!seen[p]) { seen[p] = true; ++polarities; }
        }
    }
    if (distinct_polarities) *distinct_polarities = polarities;
    return found;
}

std::vector<const TranscriptUtterance*> sorted_by_onset(
    const std::vector<TranscriptUtterance>& utterances,
    const std::vector<char>* keep, Tick* reach) {
    std::vector<const TranscriptUtterance*> out;
    *reach = 0;
    for (std::size_t i = 0; i < utterances.size(); ++i) {
        if (keep && !(*keep)[i]) continue;
        out.push_back(&utterances[i]);
        *reach = std::max(*reach, utterances[i].span.length());
    }
    std::sort(out.begin(), out.end(),
              [](const TranscriptUtterance* a, const TranscriptUtterance* b) {
                  return a->span.onset < b->span.onset;
              });
    return out;
}

}  // namespace

FrameSet build_frames(const std::vector<TranscriptUtterance>& reference,
                      Tick collar) {
    std::vector<char> speech(reference.size(), 0);
    std::vector<Interval> unk;
    std::vector<LabeledSegment> segments;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (is_unk_only(reference[i])) {
            unk.push_back(reference[i].span);
        } else {
            speech[i] = 1;
            segments.push_back({reference[i].speaker_id, reference[i].span});
        }
    }

    std::vector<LabeledSegment> merged = merge_gap(segments, kSameSpeakerGap);

    std::vector<Interval> collars;
    if (collar > 0) {
        for (const LabeledSegment& seg : merged) {
            collars.push_back({std::max<Tick>(seg.span.onset - collar, 0),
                               seg.span.onset + collar});
            collars.push_back({std::max<Tick>(seg.span.offset - collar, 0),
                               seg.span.offset + collar});
        }
    }

    std::vector<Interval> speech_spans;
    for (const LabeledSegment& seg : merged) speech_spans.push_back(seg.span);
    Timeline scorable =
        subtract(subtract(subtract(Timeline::normalize(std::move(speech_spans)),
                                   Timeline::normalize(std::move(unk))),
                          overlapping_regions(merged)),
                 Timeline::normalize(std::move(collars)));

    Tick reach = 0;
    auto sorted = sorted_by_onset(reference, &speech, &reach);

    FrameSet set;
    std::vector<Interval> covered;
    for (const Interval& iv : scorable.intervals()) {
        Tick first = (iv.onset + kFrameSize - 1) / kFrameSize * kFrameSize;
        Tick last = iv.offset / kFrameSize * kFrameSize;
        for (Tick t = first; t < last; t += kFrameSize) {
            const TranscriptUtterance* u = covering(sorted, reach, t + kFrameSize / 2);
            if (!u) continue;  // merged-away gap: non-speech, not scored
            set.frames.push_back({t, u->sentiment});
            covered.push_back({t, t + kFrameSize});
        }
    }
    set.scored_frames = Timeline::normalize(std::move(covered));
    return set;
}

Score score(const FrameSet& frames, const std::vector<TranscriptUtterance>& system) {
    Tick reach = 0;
    auto sorted = sorted_by_onset(system, nullptr, &reach);

    Score s;
    s.scored_speech_time = static_cast<Tick>(frames.frames.size()) * kFrameSize;
    for (const Frame& frame : frames.frames) {
        int polarities = 0;
        const TranscriptUtterance* u =
            covering(sorted, reach, frame.onset + kFrameSize / 2, &polarities);
        if (polarities >= 2) ++s.conflicting_system_labels;
        if (!u) {
            s.uncovered_time += kFrameSize;
            continue;
        }
        int r = static_cast<int>(frame.reference);
        int y = static_cast<int>(u->sentiment);
        s.confusion[r][y] += kFrameSize;
        if (r == y) s.tp_time += kFrameSize;
    }
    s.accuracy = s.scored_speech_time > 0
                     ? Rational(s.tp_time, s.scored_speech_time)
                     : Rational::zero();
    return s;
}

Score pool(const std::vector<Score>& scores) {
    Score total;
    for (const Score& s : scores) {
        total.tp_time += s.tp_time;
        total.scored_speech_time += s.scored_speech_time;
        total.uncovered_time += s.uncovered_time;
        total.conflicting_system_labels += s.conflicting_system_labels;
        for (int r = 0; r < 3; ++r)
            for (int y = 0; y < 3; ++y) total.confusion[r][y] += s.confusion[r][y];
    }
    total.accuracy = total.scored_speech_time > 0
                         ? Rational(total.tp_time, total.scored_speech_time)
                         : Rational::zero();
    return total;
}

}  // namespace speechscore::sentiment
