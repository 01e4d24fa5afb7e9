#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace speechscore {

// All time quantities are integer milliseconds from the start of a file.
// Label files carry seconds with at most 3 decimal places, so the
// conversion is lossless in both directions.
using Tick = std::int64_t;

// Parses a decimal seconds string ("256.04") into ticks. Returns nullopt
// for malformed text, negative values, or more than 3 fractional digits.
std::optional<Tick> parse_seconds(std::string_view text);

// Formats ticks as seconds with the minimal number of decimals (<= 3).
std::string format_seconds(Tick t);

// Half-open span [onset, offset). Zero-length intervals are legal on
// input and vanish under normalization.
struct Interval {
    Tick onset = 0;
    Tick offset = 0;

    Tick length() const { return offset - onset; }
    bool empty() const { return onset >= offset; }
    bool contains(Tick t) const { return t >= onset && t < offset; }
    bool operator==(const Interval&) const = default;
};

// Canonical disjoint interval set: members sorted by onset, pairwise
// disjoint, non-empty, and never adjacent (touching members are merged).
// The canonical form is unique for a given point set.
class Timeline {
public:
    Timeline() = default;

    // Builds the canonical form covering the union of the inputs.
    // Precondition: every interval has onset <= offset.
    static Timeline normalize(std::vector<Interval> raw);

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    std::size_t size() const { return intervals_.size(); }

    Tick duration() const;
    bool contains(Tick t) const;

    bool operator==(const Timeline&) const = default;

private:
    std::vector<Interval> intervals_;
};

Timeline unite(const Timeline& a, const Timeline& b);
Timeline intersect(const Timeline& a, const Timeline& b);
Timeline subtract(const Timeline& a, const Timeline& b);

// One labeled span (speaker name, polarity, ...). The universal shape
// behind RTTM turns, transcript utterances and SAD records.
struct LabeledSegment {
    std::string label;
    Interval span;

    bool operator==(const LabeledSegment&) const = default;
};

// Regions where two or more segments are active at once (used to drop
// annotator overlap from scoring).
Timeline overlapping_regions(const std::vector<LabeledSegment>& segments);

// Per label independently, consecutive segments whose gap is <= max_gap
// are replaced by one spanning segment (applied to fixpoint). Labels
// never mix. Output is sorted by (onset, label).
std::vector<LabeledSegment> merge_gap(std::vector<LabeledSegment> segments,
                                      Tick max_gap);

}  // namespace speechscore
