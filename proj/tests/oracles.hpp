// Brute-force reference implementations the fast interval code is
// checked against. Everything here works tick-by-tick or by exhaustive
// enumeration and stays independent of the library's algebra.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "speechscore/asr.hpp"
#include "speechscore/sad.hpp"
#include "speechscore/time.hpp"

namespace oracles {

using speechscore::Interval;
using speechscore::Tick;
using speechscore::Timeline;

// --- per-tick bitmap set algebra -----------------------------------

struct Bitmap {
    std::vector<char> bits;

    explicit Bitmap(std::size_t size) : bits(size, 0) {}

    static Bitmap from(const std::vector<Interval>& intervals, std::size_t size) {
        Bitmap b(size);
        for (const Interval& iv : intervals)
            for (Tick t = iv.onset; t < iv.offset; ++t) b.bits[t] = 1;
        return b;
    }

    static Bitmap from(const Timeline& tl, std::size_t size) {
        return from(tl.intervals(), size);
    }

    Tick count() const {
        Tick n = 0;
        for (char b : bits) n += b;
        return n;
    }

    std::vector<Interval> intervals() const {
        std::vector<Interval> out;
        std::size_t i = 0;
        while (i < bits.size()) {
            while (i < bits.size() && !bits[i]) ++i;
            std::size_t start = i;
            while (i < bits.size() && bits[i]) ++i;
            if (i > start) out.push_back({static_cast<Tick>(start), static_cast<Tick>(i)});
        }
        return out;
    }
};

inline Bitmap bm_or(const Bitmap& a, const Bitmap& b) {
    Bitmap out(a.bits.size());
    for (std::size_t i = 0; i < a.bits.size(); ++i) out.bits[i] = a.bits[i] | b.bits[i];
    return out;
}
inline Bitmap bm_and(const Bitmap& a, const Bitmap& b) {
    Bitmap out(a.bits.size());
    for (std::size_t i = 0; i < a.bits.size(); ++i) out.bits[i] = a.bits[i] & b.bits[i];
    return out;
}
inline Bitmap bm_minus(const Bitmap& a, const Bitmap& b) {
    Bitmap out(a.bits.size());
    for (std::size_t i = 0; i < a.bits.size(); ++i)
        out.bits[i] = a.bits[i] & static_cast<char>(!b.bits[i]);
    return out;
}

// --- SAD tick counting ---------------------------------------------

struct SadCounts {
    Tick tp = 0, tn = 0, fp = 0, fn = 0;
};

inline SadCounts sad_counts(const speechscore::sad::ScoringRegions& regions,
                            const Timeline& system_speech) {
    std::size_t size = static_cast<std::size_t>(regions.file_span.offset);
    Bitmap speech = Bitmap::from(regions.scored_speech, size);
    Bitmap nonspeech = Bitmap::from(regions.scored_nonspeech, size);
    Bitmap sys = Bitmap::from(system_speech, size);
    SadCounts c;
    for (std::size_t t = 0; t < size; ++t) {
        if (speech.bits[t]) (sys.bits[t] ? c.tp : c.fn)++;
        else if (nonspeech.bits[t]) (sys.bits[t] ? c.fp : c.tn)++;
    }
    return c;
}

// --- DER tick counting ---------------------------------------------

struct DerCounts {
    Tick fa = 0, miss = 0, error = 0, total = 0;
};

// One labeled speaker stream per entry; mapping is reference->system.
inline DerCounts der_counts(
    const std::vector<std::pair<std::string, std::vector<Interval>>>& ref,
    const std::vector<std::pair<std::string, std::vector<Interval>>>& sys,
    const Timeline& scoring_regions,
    const std::map<std::string, std::string>& mapping, std::size_t size) {
    std::vector<std::pair<std::string, Bitmap>> ref_bits, sys_bits;
    for (const auto& [label, spans] : ref)
        ref_bits.emplace_back(label, Bitmap::from(spans, size));
    for (const auto& [label, spans] : sys)
        sys_bits.emplace_back(label, Bitmap::from(spans, size));
    Bitmap scope = Bitmap::from(scoring_regions, size);

    DerCounts c;
    for (std::size_t t = 0; t < size; ++t) {
        if (!scope.bits[t]) continue;
        const std::string* active_ref = nullptr;
        for (const auto& [label, bits] : ref_bits)
            if (bits.bits[t]) { active_ref = &label; break; }
        int n_sys = 0;
        bool mapped_active = false;
        const std::string* wanted = nullptr;
        if (active_ref) {
            auto it = mapping.find(*active_ref);
            if (it != mapping.end()) wanted = &it->second;
        }
        for (const auto& [label, bits] : sys_bits) {
            if (!bits.bits[t]) continue;
            ++n_sys;
            if (wanted && label == *wanted) mapped_active = true;
        }
        int n_ref = active_ref ? 1 : 0;
        c.total += n_ref;
        if (n_ref == 1 && n_sys == 0) c.miss++;
        if (n_sys > n_ref) c.fa += n_sys - n_ref;
        if (n_ref == 1 && n_sys >= 1 && !mapped_active) c.error++;
    }
    return c;
}

// --- exhaustive assignment -----------------------------------------

inline std::int64_t best_assignment_exhaustive(
    const std::vector<std::vector<std::int64_t>>& w) {
    std::size_t rows = w.size();
    std::size_t cols = rows ? w[0].size() : 0;
    if (rows > cols) {
        std::vector<std::vector<std::int64_t>> t(cols,
                                                 std::vector<std::int64_t>(rows));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) t[c][r] = w[r][c];
        return best_assignment_exhaustive(t);
    }
    std::vector<int> perm(cols);
    for (std::size_t c = 0; c < cols; ++c) perm[c] = static_cast<int>(c);
    std::int64_t best = 0;
    do {
        std::int64_t total = 0;
        for (std::size_t r = 0; r < std::min(rows, cols); ++r) total += w[r][perm[r]];
        best = std::max(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // row subsets are covered implicitly: zero-weight cells contribute 0
    return best;
}

// --- exhaustive edit distance --------------------------------------

// Minimum cost over all edit scripts, recursively. Optional-delete
// reference tokens delete for free and match anything for free.
inline int edit_cost_exhaustive(const speechscore::asr::TokenSeq& ref,
                                const speechscore::asr::TokenSeq& hyp,
                                std::size_t i = 0, std::size_t j = 0) {
    if (i == ref.size() && j == hyp.size()) return 0;
    int best = 1 << 20;
    if (i < ref.size()) {
        int del = ref[i].optional_delete ? 0 : 1;
        best = std::min(best, del + edit_cost_exhaustive(ref, hyp, i + 1, j));
    }
    if (j < hyp.size())
        best = std::min(best, 1 + edit_cost_exhaustive(ref, hyp, i, j + 1));
    if (i < ref.size() && j < hyp.size()) {
        int sub = (ref[i].optional_delete || ref[i].text == hyp[j].text) ? 0 : 1;
        best = std::min(best, sub + edit_cost_exhaustive(ref, hyp, i + 1, j + 1));
    }
    return best;
}

}  // namespace oracles
