#include "speechscore/time.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace speechscore {

std::optional<Tick> parse_seconds(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool any_digit = false;
    Tick whole = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        whole = whole * 10 + (text[i] - '0');
        if (whole > 4'000'000'000LL) return std::nullopt;  // > ~46 days, garbage
        ++i;
        any_digit = true;
    }
    Tick frac = 0;
    int frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            if (++frac_digits > 3) return std::nullopt;
            frac = frac * 10 + (text[i] - '0');
            ++i;
            any_digit = true;
        }
    }
    if (i != text.size() || !any_digit) return std::nullopt;
    for (int d = frac_digits; d < 3; ++d) frac *= 10;
    return whole * 1000 + frac;
}

std::string format_seconds(Tick t) {
    assert(t >= 0);
    std::string out = std::to_string(t / 1000);
    Tick ms = t % 1000;
    if (ms == 0) return out;
    char buf[8];
    std::snprintf(buf, sizeof(buf), ".%03lld", static_cast<long long>(ms));
    std::string frac(buf);
    while (frac.back() == '0') frac.pop_back();
    return out + frac;
}

Timeline Timeline::normalize(std::vector<Interval> raw) {
    std::erase_if(raw, [](const Interval& iv) { return iv.empty(); });
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        return a.onset < b.onset;
    });
    Timeline out;
    for (const Interval& iv : raw) {
        if (!out.intervals_.empty() && iv.onset <= out.intervals_.back().offset) {
            out.intervals_.back().offset =
                std::max(out.intervals_.back().offset, iv.offset);
        } else {
            out.intervals_.push_back(iv);
        }
    }
    return out;
}

Tick Timeline::duration() const {
    Tick total = 0;
    for (const Interval& iv : intervals_) total += iv.length();
    return total;
}

bool Timeline::contains(Tick t) const {
    auto it = std::upper_bound(
        intervals_.begin(), intervals_.end(), t,
        [](Tick v, const Interval& iv) { return v < iv.onset; });
    return it != intervals_.begin() && std::prev(it)->contains(t);
}

Timeline unite(const Timeline& a, const Timeline& b) {
    std::vector<Interval> all = a.intervals();
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return Timeline::normalize(std::move(all));
}

Timeline intersect(const Timeline& a, const Timeline& b) {
    std::vector<Interval> out;
    auto ia = a.intervals().begin(), ea = a.intervals().end();
    auto ib = b.intervals().begin(), eb = b.intervals().end();
    while (ia != ea && ib != eb) {
        Tick lo = std::max(ia->onset, ib->onset);
        Tick hi = std::min(ia->offset, ib->offset);
        if (lo < hi) out.push_back({lo, hi});
        if (ia->offset < ib->offset) ++ia; else ++ib;
    }
    return Timeline::normalize(std::move(out));
}

Timeline subtract(const Timeline& a, const Timeline& b) {
    std::vector<Interval> out;
    auto ib = b.intervals().begin(), eb = b.intervals().end();
    for (Interval iv : a.intervals()) {
        while (ib != eb && ib->offset <= iv.onset) ++ib;
        auto jb = ib;
        Tick cursor = iv.onset;
        while (jb != eb && jb->onset < iv.offset) {
            if (jb->onset > cursor) out.push_back({cursor, jb->onset});
            cursor = std::max(cursor, jb->offset);
            ++jb;
        }
        if (cursor < iv.offset) out.push_back({cursor, iv.offset});
    }
    return Timeline::normalize(std::move(out));
}

Timeline overlapping_regions(const std::vector<LabeledSegment>& segments) {
    std::vector<std::pair<Tick, int>> events;
    for (const LabeledSegment& seg : segments) {
        if (seg.span.empty()) continue;
        events.push_back({seg.span.onset, +1});
        events.push_back({seg.span.offset, -1});
    }
    std::sort(events.begin(), events.end());
    std::vector<Interval> out;
    int active = 0;
    Tick start = 0;
    for (std::size_t i = 0; i < events.size();) {
        Tick t = events[i].first;
        if (active >= 2) out.push_back({start, t});
        while (i < events.size() && events[i].first == t) active += events[i++].second;
        start = t;
    }
    return Timeline::normalize(std::move(out));
}

std::vector<LabeledSegment> merge_gap(std::vector<LabeledSegment> segments,
                                      Tick max_gap) {
    std::map<std::string, std::vector<Interval>> by_label;
    for (LabeledSegment& seg : segments)
        by_label[std::move(seg.label)].push_back(seg.span);

    std::vector<LabeledSegment> out;
    for (auto& [label, spans] : by_label) {
        std::sort(spans.begin(), spans.end(),
                  [](const Interval& a, const Interval& b) {
                      return a.onset < b.onset;
                  });
        std::vector<Interval> merged;
        for (const Interval& iv : spans) {
            if (!merged.empty() && iv.onset - merged.back().offset <= max_gap) {
                merged.back().offset = std::max(merged.back().offset, iv.offset);
            } else {
                merged.push_back(iv);
            }
        }
        for (const Interval& iv : merged) out.push_back({label, iv});
    }
    std::sort(out.begin(), out.end(),
              [](const LabeledSegment& a, const LabeledSegment& b) {
                  if (a.span.onset != b.span.onset)
                      return a.span.onset < b.span.onset;
                  return a.label < b.label;
              });
    return out;
}

}  // namespace speechscore
