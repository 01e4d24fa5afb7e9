#include "speechscore/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <stdexcept>

#include <json.hpp>

#include "speechscore/prng.hpp"

namespace speechscore::fixtures {

namespace {

const char* kVocabulary[] = {
    "roger",   "copy",    "go",      "for",      "launch",   "stand",  "by",
    "affirm",  "negative", "over",   "loud",     "and",      "clear",  "we",
    "have",    "liftoff", "main",    "engine",   "nominal",  "telemetry",
    "confirm", "reading", "you",     "five",     "check",    "status", "report",
    "pressure", "valve",  "capsule", "orbit",    "burn",     "stage",  "sep",
    "guidance", "is",     "internal", "trajectory", "looks",  "good",  "all",
    "systems", "tank",    "level",   "holding",  "steady",   "switch", "to",
    "omni",    "antenna", "signal",  "strength", "four",     "attitude", "hold",
};
constexpr int kVocabularySize = static_cast<int>(std::size(kVocabulary));

constexpr Tick kMinTurnMs = 400;    // shortest observed contiguous speech
constexpr Tick kMaxTurnMs = 50000;
constexpr Tick kMinGapMs = 1200;    // stays above every merge threshold except 2 s

std::string speaker_name(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "SPK%02d", index + 1);
    return buf;
}

std::string random_words(Prng& rng, Tick duration_ms) {
    int n = std::max<int>(1, static_cast<int>(duration_ms * 25 / 10000));  // ~2.5 w/s
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (i) out += ' ';
        out += kVocabulary[rng.below(kVocabularySize)];
    }
    return out;
}

Sentiment random_sentiment(Prng& rng) {
    return static_cast<Sentiment>(rng.below(3));
}

Tick round_ms(double seconds_value_ms) {
    return static_cast<Tick>(seconds_value_ms + 0.5);
}

}  // namespace

const char* to_string(ChannelPreset preset) {
    switch (preset) {
        case ChannelPreset::EECOM: return "EECOM";
        case ChannelPreset::FD: return "FD";
        case ChannelPreset::GNC: return "GNC";
        case ChannelPreset::MOCR: return "MOCR";
        case ChannelPreset::NTWK: return "NTWK";
    }
    return "?";
}

std::optional<ChannelPreset> preset_from_string(std::string_view name) {
    if (name == "EECOM") return ChannelPreset::EECOM;
    if (name == "FD") return ChannelPreset::FD;
    if (name == "GNC") return ChannelPreset::GNC;
    if (name == "MOCR") return ChannelPreset::MOCR;
    if (name == "NTWK") return ChannelPreset::NTWK;
    return std::nullopt;
}

PresetStats preset_stats(ChannelPreset preset) {
    switch (preset) {
        case ChannelPreset::EECOM: return {16, 23.04, 6.72, 13.32};
        case ChannelPreset::FD: return {11, 28.74, 6.08, 14.67};
        case ChannelPreset::GNC: return {21, 25.18, 5.58, 14.91};
        case ChannelPreset::MOCR: return {13, 22.36, 5.65, 5.07};
        case ChannelPreset::NTWK: return {24, 17.12, 4.97, 10.68};
    }
    return {8, 10.0, 3.0, 10.0};
}

ReferenceBundle gen_reference(const FixtureSpec& spec) {
    int n_speakers = spec.n_speakers;
    double mean = spec.turn_dur_mean;
    double std = spec.turn_dur_std;
    if (spec.channel_preset) {
        PresetStats stats = preset_stats(*spec.channel_preset);
        n_speakers = stats.n_speakers;
        mean = stats.turn_dur_mean;
        std = stats.turn_dur_std;
    }
    if (n_speakers < 1) throw std::invalid_argument("fixture needs >= 1 speaker");
    if (mean <= 0 || std < 0) throw std::invalid_argument("bad turn duration parameters");
    Tick span_len = spec.file_span.length();
    if (round_ms(mean * 1000) + kMinGapMs > span_len)
        throw std::invalid_argument("requested speech does not fit the file span");

    Prng rng(spec.seed);
    ReferenceBundle bundle;
    bundle.file_id = spec.file_id;
    bundle.file_span = spec.file_span;
    for (int i = 0; i < n_speakers; ++i) bundle.speakers.push_back(speaker_name(i));

    // Alternating gap/turn walk over the span; ~40% speech density.
    double mean_gap_ms = mean * 1000 * 1.5;
    Tick cursor = spec.file_span.onset;
    while (true) {
        Tick gap = kMinGapMs + round_ms(rng.uniform() * 2.0 * mean_gap_ms);
        Tick dur = round_ms(
            rng.truncated_gauss(mean * 1000, std * 1000, kMinTurnMs, kMaxTurnMs));
        if (cursor + gap + dur + kMinGapMs > spec.file_span.offset) break;
        Tick onset = cursor + gap;
        const std::string& speaker =
            bundle.speakers[rng.below(static_cast<std::uint64_t>(n_speakers))];

        RttmTurn turn;
        turn.file_id = spec.file_id;
        turn.onset = onset;
        turn.dur = dur;
        turn.speaker = speaker;
        bundle.rttm.push_back(turn);

        TranscriptUtterance utt;
        utt.speaker_id = speaker;
        utt.span = {onset, onset + dur};
        utt.sentiment = random_sentiment(rng);
        utt.words = random_words(rng, dur);
        bundle.transcript.push_back(std::move(utt));

        cursor = onset + dur;
    }

    bundle.uem.push_back({spec.file_id, 1, spec.file_span});

    // SAD reference: alternating S / NS records covering the span.
    Tick prev = spec.file_span.onset;
    auto push_sad = [&bundle, &spec](Interval span, SadKind kind) {
        if (span.empty()) return;
        SadRecord rec;
        rec.file_id = spec.file_id;
        rec.span = span;
        rec.kind = kind;
        bundle.sad.push_back(std::move(rec));
    };
    for (const RttmTurn& turn : bundle.rttm) {
        push_sad({prev, turn.onset}, SadKind::nonspeech);
        push_sad(turn.span(), SadKind::speech);
        prev = turn.span().offset;
    }
    push_sad({prev, spec.file_span.offset}, SadKind::nonspeech);

    for (int i = 0; i < spec.n_sid_trials; ++i) {
        const std::string& speaker =
            bundle.speakers[rng.below(static_cast<std::uint64_t>(n_speakers))];
        char buf[64];
        if (spec.sid_split == Split::dev)
            std::snprintf(buf, sizeof(buf), "FS_P01_dev_%s_%03d", speaker.c_str(), i + 1);
        else
            std::snprintf(buf, sizeof(buf), "FS_P01_eval_%03d", i + 1);
        bundle.sid_key.emplace_back(buf, speaker);
    }
    return bundle;
}

SystemBundle perturb_system(const ReferenceBundle& bundle, const PlantedRates& rates,
                            std::uint64_t seed) {
    for (double r : {rates.p_miss, rates.p_fa, rates.speaker_confusion,
                     rates.wer_target, rates.sentiment_flip})
        if (r < 0.0 || r > 1.0)
            throw std::invalid_argument("planted rates must lie in [0, 1]");

    Prng rng(seed ^ 0xA5A5A5A5A5A5A5A5ULL);
    SystemBundle sys;

    // SAD: drop 1 s speech chunks with p_miss, inject 1 s false-alarm
    // chunks into non-speech with p_fa.
    std::vector<Interval> speech;
    constexpr Tick kChunk = 1000;
    Tick prev = bundle.file_span.onset;
    auto corrupt_speech = [&](Interval span) {
        for (Tick t = span.onset; t < span.offset; t += kChunk) {
            Tick end = std::min(t + kChunk, span.offset);
            if (!rng.bernoulli(rates.p_miss)) speech.push_back({t, end});
        }
    };
    auto inject_fa = [&](Interval gap) {
        for (Tick t = gap.onset; t + kChunk <= gap.offset; t += kChunk)
            if (rng.bernoulli(rates.p_fa)) speech.push_back({t, t + kChunk});
    };
    for (const RttmTurn& turn : bundle.rttm) {
        inject_fa({prev, turn.onset});
        corrupt_speech(turn.span());
        prev = turn.span().offset;
    }
    inject_fa({prev, bundle.file_span.offset});

    Timeline speech_tl = Timeline::normalize(std::move(speech));
    Tick cursor = bundle.file_span.onset;
    auto push_record = [&sys, &bundle, &rng](Interval span, SadKind kind) {
        if (span.empty()) return;
        SadRecord rec;
        rec.file_id = bundle.file_id;
        rec.span = span;
        rec.kind = kind;
        rec.confidence = kind == SadKind::speech
                             ? 0.5 + 0.5 * std::round(rng.uniform() * 1e6) / 1e6
                             : 0.25;
        sys.sad.push_back(std::move(rec));
    };
    for (const Interval& iv : speech_tl.intervals()) {
        push_record({cursor, iv.onset}, SadKind::nonspeech);
        push_record(iv, SadKind::speech);
        cursor = iv.offset;
    }
    push_record({cursor, bundle.file_span.offset}, SadKind::nonspeech);

    // SD: relabel turns with probability speaker_confusion.
    int n_speakers = static_cast<int>(bundle.speakers.size());
    for (const RttmTurn& turn : bundle.rttm) {
        RttmTurn out = turn;
        if (n_speakers > 1 && rng.bernoulli(rates.speaker_confusion)) {
            std::string other;
            do {
                other = bundle.speakers[rng.below(n_speakers)];
            } while (other == turn.speaker);
            out.speaker = other;
        }
        sys.rttm.push_back(std::move(out));
    }

    // SID: on confusion the correct label is pushed out of the top 5.
    std::vector<std::string> pool = bundle.speakers;
    for (int i = 0; i < 10; ++i) pool.push_back("IMP" + std::to_string(i + 1));
    for (const auto& [segment_id, speaker] : bundle.sid_key) {
        SidPrediction p;
        p.segment_id = segment_id;
        std::vector<std::string> candidates;
        for (const std::string& label : pool)
            if (label != speaker) candidates.push_back(label);
        for (int i = static_cast<int>(candidates.size()) - 1; i > 0; --i)
            std::swap(candidates[i], candidates[rng.below(i + 1)]);
        bool confuse = rng.bernoulli(rates.speaker_confusion);
        std::size_t c = 0;
        int correct_rank = confuse ? -1 : static_cast<int>(rng.below(5));
        for (int i = 0; i < 5; ++i)
            p.predictions[i] = (i == correct_rank) ? speaker : candidates[c++];
        sys.sid.push_back(std::move(p));
    }

    // Transcript: token edits toward wer_target plus polarity flips.
    int nonsense = 0;
    for (const TranscriptUtterance& utt : bundle.transcript) {
        TranscriptUtterance out = utt;
        std::vector<std::string> tokens;
        {
            std::size_t pos = 0;
            while (pos < utt.words.size()) {
                std::size_t sp = utt.words.find(' ', pos);
                if (sp == std::string::npos) sp = utt.words.size();
                if (sp > pos) tokens.push_back(utt.words.substr(pos, sp - pos));
                pos = sp + 1;
            }
        }
        std::vector<std::string> edited;
        for (const std::string& tok : tokens) {
            if (rng.bernoulli(rates.wer_target)) {
                switch (rng.below(3)) {
                    case 0:  // substitution
                        edited.push_back("xqz" + std::to_string(++nonsense));
                        break;
                    case 1:  // deletion
                        break;
                    case 2:  // insertion
                        edited.push_back(tok);
                        edited.push_back("xqz" + std::to_string(++nonsense));
                        break;
                }
            } else {
                edited.push_back(tok);
            }
        }
        std::string joined;
        for (const std::string& tok : edited) {
            if (!joined.empty()) joined += ' ';
            joined += tok;
        }
        out.words = std::move(joined);
        if (rng.bernoulli(rates.sentiment_flip)) {
            int shift = 1 + static_cast<int>(rng.below(2));
            out.sentiment =
                static_cast<Sentiment>((static_cast<int>(utt.sentiment) + shift) % 3);
        }
        sys.transcript.push_back(std::move(out));
    }
    return sys;
}

std::string manifest(const FixtureSpec& spec, const ReferenceBundle& bundle) {
    nlohmann::json doc;
    doc["file_id"] = bundle.file_id;
    doc["seed"] = spec.seed;
    doc["span_seconds"] = {format_seconds(bundle.file_span.onset),
                           format_seconds(bundle.file_span.offset)};
    doc["n_turns"] = bundle.rttm.size();
    doc["n_sid_trials"] = bundle.sid_key.size();
    // Declared audio properties; inert metadata, no samples exist.
    doc["audio"] = {{"format", "16-bit PCM WAV"}, {"sample_rate_hz", 8000},
                    {"channels", 1}};
    if (spec.channel_preset) {
        PresetStats stats = preset_stats(*spec.channel_preset);
        doc["channel_preset"] = to_string(*spec.channel_preset);
        doc["difficulty_tier"] = stats.snr_mean >= 12.0  ? "clean"
                                 : stats.snr_mean >= 8.0 ? "moderate"
                                                         : "degraded";
    }
    return doc.dump(2) + "\n";
}

}  // namespace speechscore::fixtures
