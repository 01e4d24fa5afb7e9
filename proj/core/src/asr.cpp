#include "speechscore/asr.hpp"

#include <algorithm>
#include <cctype>

namespace speechscore::asr {

namespace {

bool strip_char(char c) {
    switch (c) {
        case '.': case ',': case '?': case '!': case ';': case ':':
        case '"': case '(': case ')':
            return true;
        default:
            return false;
    }
}

bool all_optional(const TokenSeq& tokens) {
    return !tokens.empty() &&
           std::all_of(tokens.begin(), tokens.end(),
                       [](const Token& t) { return t.optional_delete; });
}

}  // namespace

TokenSeq tokenize(std::string_view words) {
    TokenSeq out;
    std::size_t i = 0;
    while (i < words.size()) {
        while (i < words.size() && std::isspace(static_cast<unsigned char>(words[i])))
            ++i;
        std::size_t start = i;
        while (i < words.size() && !std::isspace(static_cast<unsigned char>(words[i])))
            ++i;
        if (i == start) continue;
        std::string_view raw = words.substr(start, i - start);
        while (!raw.empty() && strip_char(raw.front())) raw.remove_prefix(1);
        while (!raw.empty() && strip_char(raw.back())) raw.remove_suffix(1);
        if (raw.empty()) continue;
        Token tok;
        tok.text.reserve(raw.size());
        for (char c : raw)
            tok.text.push_back(
                static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        tok.optional_delete = (tok.text == "[unk]");
        out.push_back(std::move(tok));
    }
    return out;
}

Alignment align(const TokenSeq& ref, const TokenSeq& hyp) {
    const int n = static_cast<int>(ref.size());
    const int m = static_cast<int>(hyp.size());
    constexpr int kInf = 1 << 28;

    // dp[i][j]: min cost aligning ref[0..i) to hyp[0..j)
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, kInf));
    dp[0][0] = 0;
    auto del_cost = [&](int i) { return ref[i].optional_delete ? 0 : 1; };
    for (int i = 1; i <= n; ++i) dp[i][0] = dp[i - 1][0] + del_cost(i - 1);
    for (int j = 1; j <= m; ++j) dp[0][j] = j;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            bool correct = ref[i - 1].optional_delete ||
                           ref[i - 1].text == hyp[j - 1].text;
            int diag = dp[i - 1][j - 1] + (correct ? 0 : 1);
            int up = dp[i - 1][j] + del_cost(i - 1);
            int left = dp[i][j - 1] + 1;
            dp[i][j] = std::min({diag, up, left});
        }
    }

    Alignment result;
    int i = n, j = m;
    std::vector<EditStep> steps;
    while (i > 0 || j > 0) {
        bool correct = i > 0 && j > 0 &&
                       (ref[i - 1].optional_delete || ref[i - 1].text == hyp[j - 1].text);
        if (i > 0 && j > 0 && correct && dp[i][j] == dp[i - 1][j - 1]) {
            steps.push_back({EditOp::correct, i - 1, j - 1});
            --i; --j;
        } else if (i > 0 && j > 0 && !correct && dp[i][j] == dp[i - 1][j - 1] + 1) {
            steps.push_back({EditOp::substitution, i - 1, j - 1});
            --i; --j;
        } else if (i > 0 && dp[i][j] == dp[i - 1][j] + del_cost(i - 1)) {
            steps.push_back({EditOp::deletion, i - 1, -1});
            --i;
        } else {
            steps.push_back({EditOp::insertion, -1, j - 1});
            --j;
        }
    }
    std::reverse(steps.begin(), steps.end());

    Score& s = result.score;
    s.n_ref = n;
    for (const EditStep& step : steps) {
        switch (step.op) {
            case EditOp::correct: break;
            case EditOp::substitution: ++s.n_subst; break;
            case EditOp::deletion:
                if (!ref[step.ref_index].optional_delete) ++s.n_del;
                break;
            case EditOp::insertion: ++s.n_ins; break;
        }
    }
    s.undefined = (s.n_ref == 0);
    s.wer = s.undefined ? Rational::zero()
                        : Rational(s.n_del + s.n_ins + s.n_subst, s.n_ref);
    result.steps = std::move(steps);
    return result;
}

CorpusScore score_corpus(const std::vector<TranscriptUtterance>& reference,
                         const std::vector<TranscriptUtterance>& hypothesis,
                         const std::string& file_id) {
    struct RefEntry {
        const TranscriptUtterance* utt;
        TokenSeq tokens;
        bool all_unk;
        std::vector<const TranscriptUtterance*> matched_hyps;
    };
    std::vector<RefEntry> refs;
    for (const TranscriptUtterance& u : reference) {
        RefEntry e;
        e.utt = &u;
        e.tokens = tokenize(u.words);
        e.all_unk = all_optional(e.tokens);
        refs.push_back(std::move(e));
    }

    CorpusScore corpus;
    for (const TranscriptUtterance& h : hypothesis) {
        RefEntry* best = nullptr;
        Tick best_overlap = 0;
        for (RefEntry& e : refs) {
            if (e.all_unk) continue;
            Tick lo = std::max(e.utt->span.onset, h.span.onset);
            Tick hi = std::min(e.utt->span.offset, h.span.offset);
            if (hi - lo > best_overlap) { best_overlap = hi - lo; best = &e; }
        }
        if (best) best->matched_hyps.push_back(&h);
        else
            corpus.unscored_extras.push_back(
                file_id + " [" + format_seconds(h.span.onset) + ", " +
                format_seconds(h.span.offset) + ")");
    }

    std::vector<Score> pooled;
    for (RefEntry& e : refs) {
        SegmentResult seg;
        seg.file_id = file_id;
        seg.ref_span = e.utt->span;
        if (e.all_unk) {
            seg.skipped_all_unk = true;
            corpus.segments.push_back(std::move(seg));
            continue;
        }
        std::sort(e.matched_hyps.begin(), e.matched_hyps.end(),
                  [](const TranscriptUtterance* a, const TranscriptUtterance* b) {
                      return a->span.onset < b->span.onset;
                  });
        TokenSeq hyp_tokens;
        for (const TranscriptUtterance* h : e.matched_hyps) {
            TokenSeq t = tokenize(h->words);
            hyp_tokens.insert(hyp_tokens.end(), t.begin(), t.end());
        }
        seg.alignment = align(e.tokens, hyp_tokens);
        if (!seg.alignment.score.undefined) pooled.push_back(seg.alignment.score);
        corpus.segments.push_back(std::move(seg));
    }
    corpus.pooled = pool(pooled);
    return corpus;
}

Score pool(const std::vector<Score>& scores) {
    Score total;
    for (const Score& s : scores) {
        if (s.undefined) continue;
        total.n_del += s.n_del;
        total.n_ins += s.n_ins;
        total.n_subst += s.n_subst;
        total.n_ref += s.n_ref;
    }
    total.undefined = (total.n_ref == 0);
    total.wer = total.undefined
                    ? Rational::zero()
                    : Rational(total.n_del + total.n_ins + total.n_subst, total.n_ref);
    return total;
}

}  // namespace speechscore::asr
