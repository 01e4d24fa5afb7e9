#pragma once

#include <string>
#include <vector>

#include "speechscore/formats.hpp"
#include "speechscore/rational.hpp"

namespace speechscore::asr {

struct Token {
    std::string text;            // case-folded
    bool optional_delete = false;  // [unk]: deleting it costs nothing

    bool operator==(const Token&) const = default;
};

using TokenSeq = std::vector<Token>;

enum class EditOp { correct, substitution, deletion, insertion };

struct EditStep {
    EditOp op;
    int ref_index = -1;  // -1 for insertions
    int hyp_index = -1;  // -1 for deletions
};

struct Score {
    int n_del = 0;
    int n_ins = 0;
    int n_subst = 0;
    int n_ref = 0;  // includes optionally deletable tokens
    Rational wer;
    bool undefined = false;  // n_ref == 0
};

struct Alignment {
    std::vector<EditStep> steps;
    Score score;
};

// Whitespace split, case fold, strip leading/trailing punctuation
// (internal apostrophes and hyphens survive). "[unk]" becomes an
// optionally deletable token.
TokenSeq tokenize(std::string_view words);

// Minimum-cost alignment: unit substitution/insertion/deletion cost,
// free deletion of optional tokens, and an optional token matched
// against anything counts as correct. Backtrace ties prefer
// correct > substitution > deletion > insertion.
Alignment align(const TokenSeq& ref, const TokenSeq& hyp);

struct SegmentResult {
    std::string file_id;
    Interval ref_span;
    Alignment alignment;
    bool skipped_all_unk = false;
};

struct CorpusScore {
    Score pooled;
    std::vector<SegmentResult> segments;
    std::vector<std::string> unscored_extras;  // unmatched hypothesis spans
};

// Pairs hypothesis utterances to reference utterances of one file by
// maximal time overlap, aligns each pair, and pools the counts.
// References consisting entirely of [unk] are skipped.
CorpusScore score_corpus(const std::vector<TranscriptUtterance>& reference,
                         const std::vector<TranscriptUtterance>& hypothesis,
                         const std::string& file_id = "");

Score pool(const std::vector<Score>& scores);

}  // namespace speechscore::asr
