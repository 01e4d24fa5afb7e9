#include "speechscore/diar.hpp"

#include <algorithm>
#include <set>

#include "speechscore/assignment.hpp"

namespace speechscore::diar {

namespace {

// Per-label canonical timelines, restricted to `regions`, labels sorted.
std::vector<std::pair<std::string, Timeline>> speaker_timelines(
    const std::vector<LabeledSegment>& segments, const Timeline& regions) {
    std::map<std::string, std::vector<Interval>> by_label;
    for (const LabeledSegment& seg : segments)
        by_label[seg.label].push_back(seg.span);
    std::vector<std::pair<std::string, Timeline>> out;
    for (auto& [label, spans] : by_label)
        out.push_back(
            {label, intersect(Timeline::normalize(std::move(spans)), regions)});
    return out;
}

std::vector<LabeledSegment> to_segments(const std::vector<RttmTurn>& turns) {
    std::vector<LabeledSegment> segments;
    for (const RttmTurn& t : turns) segments.push_back({t.speaker, t.span()});
    return segments;
}

// Best achievable total over rows [from_row, n) avoiding `used_cols`.
std::int64_t best_completion(const std::vector<std::vector<Tick>>& overlap,
                             std::size_t from_row, const std::set<int>& used_cols) {
    if (from_row >= overlap.size()) return 0;
    std::size_t cols = overlap.empty() ? 0 : overlap[0].size();
    std::vector<int> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!used_cols.count(static_cast<int>(c))) free_cols.push_back(static_cast<int>(c));
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t r = from_row; r < overlap.size(); ++r) {
        std::vector<std::int64_t> row;
        for (int c : free_cols) row.push_back(overlap[r][c]);
        sub.push_back(std::move(row));
    }
    return max_weight_assignment_value(sub);
}

}  // namespace

Reference prepare_reference(const std::vector<RttmTurn>& turns,
                            const std::vector<UemRegion>& uem, Tick collar,
                            Tick span_hint) {
    std::vector<LabeledSegment> named;
    std::vector<Interval> unk;
    Tick last_offset = span_hint;
    for (const RttmTurn& t : turns) {
        last_offset = std::max(last_offset, t.span().offset);
        if (t.speaker == kUnknownSpeaker) unk.push_back(t.span());
        else named.push_back({t.speaker, t.span()});
    }

    Reference ref;
    ref.turns = merge_gap(std::move(named), kSameSpeakerGap);

    std::vector<Interval> collars;
    if (collar > 0) {
        for (const LabeledSegment& seg : ref.turns) {
            collars.push_back({std::max<Tick>(seg.span.onset - collar, 0),
                               seg.span.onset + collar});
            collars.push_back({std::max<Tick>(seg.span.offset - collar, 0),
                               seg.span.offset + collar});
        }
    }

    ref.excluded = unite(unite(Timeline::normalize(std::move(unk)),
                               overlapping_regions(ref.turns)),
                         Timeline::normalize(std::move(collars)));

    std::vector<Interval> scope;
    for (const UemRegion& region : uem) scope.push_back(region.span);
    if (scope.empty()) scope.push_back({0, last_offset});

    ref.scoring_regions = subtract(Timeline::normalize(std::move(scope)), ref.excluded);
    ref.empty_after_preparation = ref.scoring_regions.empty() || ref.turns.empty();
    return ref;
}

SpeakerMapping map_speakers(const Reference& ref,
                            const std::vector<RttmTurn>& system_turns) {
    SpeakerMapping m;
    auto ref_lines = speaker_timelines(ref.turns, ref.scoring_regions);
    auto sys_lines = speaker_timelines(to_segments(system_turns), ref.scoring_regions);
    for (auto& [label, tl] : ref_lines) m.reference_speakers.push_back(label);
    for (auto& [label, tl] : sys_lines) m.system_speakers.push_back(label);

    m.overlap.assign(ref_lines.size(), std::vector<Tick>(sys_lines.size(), 0));
    for (std::size_t r = 0; r < ref_lines.size(); ++r)
        for (std::size_t s = 0; s < sys_lines.size(); ++s)
            m.overlap[r][s] =
                intersect(ref_lines[r].second, sys_lines[s].second).duration();

    std::vector<std::vector<std::int64_t>> weights;
    for (const auto& row : m.overlap)
        weights.push_back(std::vector<std::int64_t>(row.begin(), row.end()));
    const std::int64_t optimum = max_weight_assignment_value(weights);

    // Fix pairs greedily in label order; a pair survives only if the
    // rest of the matrix can still complete to the optimum. This picks
    // the lexicographically smallest optimal pair sequence.
    std::set<int> used_cols;
    std::int64_t fixed = 0;
    for (std::size_t r = 0; r < ref_lines.size(); ++r) {
        bool mapped = false;
        for (std::size_t s = 0; s < sys_lines.size() && !mapped; ++s) {
            if (used_cols.count(static_cast<int>(s)) || m.overlap[r][s] <= 0) continue;
            std::set<int> next_used = used_cols;
            next_used.insert(static_cast<int>(s));
            if (fixed + m.overlap[r][s] + best_completion(m.overlap, r + 1, next_used) ==
                optimum) {
                used_cols = std::move(next_used);
                fixed += m.overlap[r][s];
                m.pairs[m.reference_speakers[r]] = m.system_speakers[s];
                mapped = true;
            }
        }
    }
    m.mapped_overlap = fixed;
    return m;
}

Score score(const Reference& ref, const std::vector<RttmTurn>& system_turns,
            const SpeakerMapping& mapping) {
    auto ref_lines = speaker_timelines(ref.turns, ref.scoring_regions);
    auto sys_lines = speaker_timelines(to_segments(system_turns), ref.scoring_regions);

    Score result;
    for (const auto& [label, tl] : ref_lines) result.total += tl.duration();

    std::vector<Tick> bounds;
    auto add_bounds = [&bounds](const Timeline& tl) {
        for (const Interval& iv : tl.intervals()) {
            bounds.push_back(iv.onset);
            bounds.push_back(iv.offset);
        }
    };
    add_bounds(ref.scoring_regions);
    for (const auto& [label, tl] : ref_lines) add_bounds(tl);
    for (const auto& [label, tl] : sys_lines) add_bounds(tl);
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        Tick t1 = bounds[i], t2 = bounds[i + 1];
        Tick mid = t1 + (t2 - t1) / 2;
        if (!ref.scoring_regions.contains(mid)) continue;
        Tick len = t2 - t1;

        const std::string* active_ref = nullptr;
        for (const auto& [label, tl] : ref_lines)
            if (tl.contains(mid)) { active_ref = &label; break; }

        int n_sys = 0;
        bool mapped_active = false;
        const std::string* wanted = nullptr;
        if (active_ref) {
            auto it = mapping.pairs.find(*active_ref);
            if (it != mapping.pairs.end()) wanted = &it->second;
        }
        for (const auto& [label, tl] : sys_lines) {
            if (!tl.contains(mid)) continue;
            ++n_sys;
            if (wanted && label == *wanted) mapped_active = true;
        }

        int n_ref = active_ref ? 1 : 0;
        if (n_ref == 1 && n_sys == 0) result.miss += len;
        if (n_sys > n_ref) result.fa += static_cast<Tick>(n_sys - n_ref) * len;
        if (n_ref == 1 && n_sys >= 1 && !mapped_active) result.error += len;
    }

    result.unscorable = (result.total == 0);
    result.der = result.unscorable
                     ? Rational::zero()
                     : Rational(result.fa + result.miss + result.error, result.total);
    return result;
}

Score pool(const std::vector<Score>& scores) {
    Score total;
    for (const Score& s : scores) {
        total.fa += s.fa;
        total.miss += s.miss;
        total.error += s.error;
        total.total += s.total;
    }
    total.unscorable = (total.total == 0);
    total.der = total.unscorable
                    ? Rational::zero()
                    : Rational(total.fa + total.miss + total.error, total.total);
    return total;
}

}  // namespace speechscore::diar
