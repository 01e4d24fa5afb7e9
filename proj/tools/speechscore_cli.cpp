// Command-line front end: validation, per-task scoring, DCF sweep,
// fixture generation and submission packaging.

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "speechscore/asr.hpp"
#include "speechscore/diar.hpp"
#include "speechscore/fixtures.hpp"
#include "speechscore/formats.hpp"
#include "speechscore/package.hpp"
#include "speechscore/report.hpp"
#include "speechscore/sad.hpp"
#include "speechscore/sentiment.hpp"
#include "speechscore/sid.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace speechscore;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

// A file path stays a single input; a directory expands to its regular
// files sorted by name.
std::vector<fs::path> expand(const fs::path& path) {
    if (!fs::exists(path)) throw std::runtime_error("no such path: " + path.string());
    if (!fs::is_directory(path)) return {path};
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

int default_workers() {
    if (const char* env = std::getenv("SPEECHSCORE_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

struct LoadedInput {
    report::InputDigest digest;
    std::string content;
};

LoadedInput load(const std::string& role, const fs::path& path) {
    LoadedInput in;
    in.content = read_file(path);
    in.digest = {role, path.string(), report::digest(in.content)};
    return in;
}

void emit_report(const report::Builder& builder, const std::string& out_path) {
    std::string text = builder.render();
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
}

// ---------------------------------------------------------------- SAD

struct SadFileInputs {
    Timeline ref_speech;
    Interval span;
    std::vector<SadRecord> sys_records;
    std::vector<Interval> uem_regions;  // optional restriction, off by default
};

std::map<std::string, SadFileInputs> collect_sad(const fs::path& ref_path,
                                                 const fs::path& sys_path,
                                                 const fs::path& uem_path,
                                                 std::vector<report::InputDigest>* inputs,
                                                 std::vector<std::string>* warnings) {
    std::map<std::string, SadFileInputs> files;
    for (const fs::path& p : expand(ref_path)) {
        LoadedInput in = load("ref", p);
        inputs->push_back(in.digest);
        ParseOptions opts{p.string()};
        opts.warnings = warnings;
        for (SadRecord& rec : parse_sad(in.content, SadMode::reference, opts)) {
            SadFileInputs& f = files[rec.file_id];
            f.span.onset = std::min(f.span.onset, rec.span.onset);
            f.span.offset = std::max(f.span.offset, rec.span.offset);
            if (rec.kind == SadKind::speech)
                f.ref_speech = unite(f.ref_speech, Timeline::normalize({rec.span}));
        }
    }
    for (const fs::path& p : expand(sys_path)) {
        LoadedInput in = load("sys", p);
        inputs->push_back(in.digest);
        ParseOptions opts{p.string()};
        opts.warnings = warnings;
        opts.system_output = true;
        for (SadRecord& rec : parse_sad(in.content, SadMode::system, opts)) {
            auto it = files.find(rec.file_id);
            if (it == files.end()) {
                if (warnings)
                    warnings->push_back("system file id '" + rec.file_id +
                                        "' has no reference; ignored");
                continue;
            }
            it->second.sys_records.push_back(std::move(rec));
        }
    }
    if (!uem_path.empty()) {
        for (const fs::path& p : expand(uem_path)) {
            LoadedInput in = load("uem", p);
            inputs->push_back(in.digest);
            ParseOptions opts{p.string()};
            for (const UemRegion& r : parse_uem(in.content, opts)) {
                auto it = files.find(r.file_id);
                if (it != files.end()) it->second.uem_regions.push_back(r.span);
            }
        }
    }
    return files;
}

int run_score_sad(const fs::path& ref_path, const fs::path& sys_path,
                  const fs::path& uem_path, const std::string& report_path,
                  int workers, bool sweep) {
    report::Builder builder;
    builder.task = "SAD";
    std::vector<std::string> warnings;
    auto files = collect_sad(ref_path, sys_path, uem_path, &builder.inputs, &warnings);

    std::vector<std::pair<const std::string*, const SadFileInputs*>> order;
    for (const auto& [id, f] : files) order.push_back({&id, &f});

    std::vector<sad::Score> scores(order.size());
    std::vector<json> extras(order.size());
    parallel_for(order.size(), workers, [&](std::size_t i) {
        const SadFileInputs& f = *order[i].second;
        // With a UEM restriction every region scores as its own span, so
        // the collar rules hold inside each region; ticks are pooled.
        std::vector<Interval> spans =
            f.uem_regions.empty() ? std::vector<Interval>{f.span} : f.uem_regions;
        if (sweep) {
            if (spans.size() == 1) {
                auto regions = sad::build_scoring_regions(
                    intersect(f.ref_speech, Timeline::normalize({spans[0]})), spans[0]);
                sad::SweepResult result = sad::sweep_dcf(regions, f.sys_records);
                scores[i] = result.best;
                json curve = json::array();
                for (const sad::SweepPoint& pt : result.curve)
                    curve.push_back({{"theta", pt.theta},
                                     {"dcf", report::to_json(pt.score.dcf)}});
                extras[i] = {{"theta_star", result.theta_star},
                             {"curve", std::move(curve)}};
            } else {
                throw std::runtime_error(
                    "sweep-dcf does not support a UEM restriction");
            }
        } else {
            std::vector<Interval> speech;
            for (const SadRecord& rec : f.sys_records)
                if (rec.kind == SadKind::speech) speech.push_back(rec.span);
            Timeline sys_speech = Timeline::normalize(std::move(speech));
            std::vector<sad::Score> parts;
            for (const Interval& span : spans) {
                Timeline window = Timeline::normalize({span});
                auto regions =
                    sad::build_scoring_regions(intersect(f.ref_speech, window), span);
                parts.push_back(sad::score(regions, intersect(sys_speech, window)));
            }
            scores[i] = sad::pool(parts);
        }
    });

    for (std::size_t i = 0; i < order.size(); ++i) {
        json entry = report::to_json(scores[i]);
        if (sweep) entry["sweep"] = extras[i];
        builder.add_file(*order[i].first, std::move(entry));
    }
    builder.aggregate = report::to_json(sad::pool(scores));
    if (!warnings.empty()) builder.extra = json{{"warnings", warnings}};
    emit_report(builder, report_path);
    return kExitOk;
}

// ----------------------------------------------------------------- SD

int run_score_sd(const fs::path& ref_path, const fs::path& sys_path,
                 const fs::path& uem_path, const std::string& report_path,
                 int workers) {
    report::Builder builder;
    builder.task = "SD";
    std::vector<std::string> warnings;

    std::map<std::string, std::vector<RttmTurn>> ref_by_file, sys_by_file;
    std::map<std::string, std::vector<UemRegion>> uem_by_file;
    for (const fs::path& p : expand(ref_path)) {
        LoadedInput in = load("ref", p);
        builder.inputs.push_back(in.digest);
        ParseOptions opts{p.string()};
        opts.warnings = &warnings;
        for (RttmTurn& t : parse_rttm(in.content, opts))
            ref_by_file[t.file_id].push_back(std::move(t));
    }
    for (const fs::path& p : expand(sys_path)) {
        LoadedInput in = load("sys", p);
        builder.inputs.push_back(in.digest);
        ParseOptions opts{p.string()};
        opts.warnings = &warnings;
        opts.system_output = true;
        for (RttmTurn& t : parse_rttm(in.content, opts))
            sys_by_file[t.file_id].push_back(std::move(t));
    }
    if (!uem_path.empty()) {
        for (const fs::path& p : expand(uem_path)) {
            LoadedInput in = load("uem", p);
            builder.inputs.push_back(in.digest);
            ParseOptions opts{p.string()};
            for (UemRegion& r : parse_uem(in.content, opts))
                uem_by_file[r.file_id].push_back(std::move(r));
        }
    }

    std::vector<const std::string*> order;
    for (const auto& [id, turns] : ref_by_file) order.push_back(&id);
    std::vector<diar::Score> scores(order.size());
    parallel_for(order.size(), workers, [&](std::size_t i) {
        const std::string& id = *order[i];
        static const std::vector<RttmTurn> kNoTurns;
        static const std::vector<UemRegion> kNoUem;
        auto sys_it = sys_by_file.find(id);
        auto uem_it = uem_by_file.find(id);
        const auto& sys = sys_it == sys_by_file.end() ? kNoTurns : sys_it->second;
        const auto& uem = uem_it == uem_by_file.end() ? kNoUem : uem_it->second;
        diar::Reference ref = diar::prepare_reference(ref_by_file[id], uem);
        diar::SpeakerMapping mapping = diar::map_speakers(ref, sys);
        scores[i] = diar::score(ref, sys, mapping);
    });

    for (std::size_t i = 0; i < order.size(); ++i)
        builder.add_file(*order[i], report::to_json(scores[i]));
    json aggregate = report::to_json(diar::pool(scores));
    aggregate["note"] = "corpus-level pooling; the per-file DER values are primary";
    builder.aggregate = std::move(aggregate);
    if (!warnings.empty()) builder.extra = json{{"warnings", warnings}};
    emit_report(builder, report_path);
    return kExitOk;
}

// ---------------------------------------------------------------- SID

int run_score_sid(const fs::path& ref_path, const fs::path& sys_path,
                  const std::string& split, const std::string& report_path) {
    report::Builder builder;
    builder.task = "SID";

    LoadedInput sys_in = load("sys", sys_path);
    builder.inputs.push_back(sys_in.digest);
    ParseOptions opts{sys_path.string()};
    std::vector<SidPrediction> predictions = parse_sid_output(sys_in.content, opts);

    std::vector<std::pair<std::string, std::string>> references;
    if (!ref_path.empty()) {
        LoadedInput ref_in = load("ref", ref_path);
        builder.inputs.push_back(ref_in.digest);
        ParseOptions kopts{ref_path.string()};
        references = sid::parse_key_file(ref_in.content, kopts);
    } else {
        if (split != "dev")
            throw std::runtime_error(
                "eval scoring needs a key file (--ref); labels are not in the names");
        for (const SidPrediction& p : predictions) {
            auto label = ref_label_from_filename(p.segment_id, Split::dev);
            references.emplace_back(p.segment_id, *label);
        }
    }

    std::vector<std::string> extras;
    std::vector<sid::Trial> trials = sid::build_trials(references, predictions, &extras);
    sid::Score score = sid::score_top5(trials);

    for (const sid::TrialResult& t : score.per_trial) {
        json entry;
        entry["hit"] = t.hit;
        if (t.missing_prediction) entry["missing_prediction"] = true;
        builder.add_file(t.segment_id, std::move(entry));
    }
    builder.aggregate = report::to_json(score);
    if (!extras.empty()) builder.extra = json{{"unlisted_predictions", extras}};
    emit_report(builder, report_path);
    return kExitOk;
}

// -------------------------------------------------- transcript pairing

std::vector<std::tuple<std::string, fs::path, fs::path>> pair_by_stem(
    const fs::path& ref_path, const fs::path& sys_path) {
    std::vector<std::tuple<std::string, fs::path, fs::path>> pairs;
    if (!fs::is_directory(ref_path)) {
        pairs.emplace_back(ref_path.stem().string(), ref_path, sys_path);
        return pairs;
    }
    std::map<std::string, fs::path> sys_by_stem;
    for (const fs::path& p : expand(sys_path)) sys_by_stem[p.stem().string()] = p;
    for (const fs::path& p : expand(ref_path)) {
        auto it = sys_by_stem.find(p.stem().string());
        if (it == sys_by_stem.end())
            throw std::runtime_error("no system output for " + p.string());
        pairs.emplace_back(p.stem().string(), p, it->second);
    }
    return pairs;
}

// ---------------------------------------------------------------- ASR

int run_score_asr(const fs::path& ref_path, const fs::path& sys_path,
                  const std::string& report_path, int workers) {
    report::Builder builder;
    builder.task = "ASR";
    auto pairs = pair_by_stem(ref_path, sys_path);

    std::vector<asr::CorpusScore> scores(pairs.size());
    std::vector<std::pair<report::InputDigest, report::InputDigest>> digests(pairs.size());
    parallel_for(pairs.size(), workers, [&](std::size_t i) {
        const auto& [stem, ref_file, sys_file] = pairs[i];
        LoadedInput ref_in = load("ref", ref_file);
        LoadedInput sys_in = load("sys", sys_file);
        digests[i] = {ref_in.digest, sys_in.digest};
        auto reference = parse_transcript(ref_in.content, {ref_file.string()});
        auto hypothesis = parse_transcript(sys_in.content, {sys_file.string()});
        scores[i] = asr::score_corpus(reference, hypothesis, stem);
    });

    std::vector<asr::Score> pooled;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        builder.inputs.push_back(digests[i].first);
        builder.inputs.push_back(digests[i].second);
        json entry = report::to_json(scores[i].pooled);
        json segs = json::array();
        for (const asr::SegmentResult& seg : scores[i].segments) {
            json s;
            s["span"] = {format_seconds(seg.ref_span.onset),
                         format_seconds(seg.ref_span.offset)};
            if (seg.skipped_all_unk) s["skipped"] = "all-unk";
            else s["score"] = report::to_json(seg.alignment.score);
            segs.push_back(std::move(s));
        }
        entry["segments"] = std::move(segs);
        if (!scores[i].unscored_extras.empty())
            entry["unscored_extras"] = scores[i].unscored_extras;
        builder.add_file(std::get<0>(pairs[i]), std::move(entry));
        pooled.push_back(scores[i].pooled);
    }
    builder.aggregate = report::to_json(asr::pool(pooled));
    emit_report(builder, report_path);
    return kExitOk;
}

// ----------------------------------------------------------- SENTIMENT

int run_score_sentiment(const fs::path& ref_path, const fs::path& sys_path,
                        const std::string& report_path, int workers) {
    report::Builder builder;
    builder.task = "SENTIMENT";
    auto pairs = pair_by_stem(ref_path, sys_path);

    std::vector<sentiment::Score> scores(pairs.size());
    std::vector<std::pair<report::InputDigest, report::InputDigest>> digests(pairs.size());
    parallel_for(pairs.size(), workers, [&](std::size_t i) {
        const auto& [stem, ref_file, sys_file] = pairs[i];
        LoadedInput ref_in = load("ref", ref_file);
        LoadedInput sys_in = load("sys", sys_file);
        digests[i] = {ref_in.digest, sys_in.digest};
        auto reference = parse_transcript(ref_in.content, {ref_file.string()});
        auto system = parse_transcript(sys_in.content, {sys_file.string()});
        sentiment::FrameSet frames = sentiment::build_frames(reference);
        scores[i] = sentiment::score(frames, system);
    });

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        builder.inputs.push_back(digests[i].first);
        builder.inputs.push_back(digests[i].second);
        builder.add_file(std::get<0>(pairs[i]), report::to_json(scores[i]));
    }
    builder.aggregate = report::to_json(sentiment::pool(scores));
    emit_report(builder, report_path);
    return kExitOk;
}

// ------------------------------------------------------------ validate

int run_validate(std::string task, const std::vector<std::string>& paths) {
    for (char& c : task) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    int failures = 0;
    std::vector<std::string> warnings;
    for (const std::string& root : paths) {
        for (const fs::path& p : expand(root)) {
            try {
                std::string content = read_file(p);
                ParseOptions opts{p.string()};
                opts.warnings = &warnings;
                opts.system_output = true;
                if (task == "SAD") parse_sad(content, SadMode::system, opts);
                else if (task == "SD") parse_rttm(content, opts);
                else if (task == "SID") parse_sid_output(content, opts);
                else if (task == "ASR" || task == "SENTIMENT")
                    parse_transcript(content, opts);
                else if (task == "UEM") parse_uem(content, opts);
                else throw std::runtime_error("unknown task " + task);
                std::cout << p.string() << ": OK\n";
            } catch (const FormatError& e) {
                std::cerr << "error: " << e.what() << "\n";
                ++failures;
            }
        }
    }
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    return failures ? kExitFailure : kExitOk;
}

// -------------------------------------------------------- gen-fixtures

int run_gen_fixtures(const fs::path& out_dir, std::uint64_t seed, int n_files,
                     const std::string& preset, double span_minutes, int sid_trials,
                     const fixtures::PlantedRates& rates) {
    fixtures::FixtureSpec spec;
    spec.planted = rates;
    spec.n_sid_trials = sid_trials;
    if (!preset.empty()) {
        auto p = fixtures::preset_from_string(preset);
        if (!p) throw std::runtime_error("unknown channel preset " + preset);
        spec.channel_preset = *p;
    }
    spec.file_span = {0, static_cast<Tick>(span_minutes * 60 * 1000)};

    for (int i = 0; i < n_files; ++i) {
        char id[32];
        std::snprintf(id, sizeof(id), "FS_P01_dev_%03d", i + 1);
        spec.file_id = id;
        spec.seed = seed + static_cast<std::uint64_t>(i);
        fixtures::ReferenceBundle ref = fixtures::gen_reference(spec);
        fixtures::SystemBundle sys =
            fixtures::perturb_system(ref, spec.planted, spec.seed);

        fs::path base = out_dir;
        write_file(base / "ref" / (ref.file_id + ".rttm"), serialize_rttm(ref.rttm));
        write_file(base / "ref" / (ref.file_id + ".uem"), serialize_uem(ref.uem));
        write_file(base / "ref" / (ref.file_id + ".sad.txt"),
                   serialize_sad(ref.sad, SadMode::reference));
        write_file(base / "ref" / (ref.file_id + ".json"),
                   serialize_transcript(ref.transcript));
        if (!ref.sid_key.empty())
            write_file(base / "ref" / (ref.file_id + ".key"),
                       sid::serialize_key_file(ref.sid_key));
        write_file(base / "sys" / (ref.file_id + ".rttm"), serialize_rttm(sys.rttm));
        write_file(base / "sys" / (ref.file_id + ".sad.txt"),
                   serialize_sad(sys.sad, SadMode::system));
        write_file(base / "sys" / (ref.file_id + ".json"),
                   serialize_transcript(sys.transcript));
        if (!sys.sid.empty())
            write_file(base / "sys" / (ref.file_id + ".sid.txt"),
                       serialize_sid_output(sys.sid));
        write_file(base / (ref.file_id + ".manifest.json"),
                   fixtures::manifest(spec, ref));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scoring and validation toolkit for the five-task speech challenge"};
    app.require_subcommand(1);

    // score
    auto* score_cmd = app.add_subcommand("score", "Score a system output against a reference");
    std::string task, ref_path, sys_path, uem_path, report_path, split = "dev";
    int workers = default_workers();
    score_cmd->add_option("task", task, "sad|sd|sid|asr|sentiment")->required();
    score_cmd->add_option("--ref,-r", ref_path, "reference file or directory");
    score_cmd->add_option("--sys,-s", sys_path, "system output file or directory")
        ->required();
    score_cmd->add_option("--uem,-u", uem_path, "UEM scoring regions (SD)");
    score_cmd->add_option("--report", report_path, "write the JSON report here");
    score_cmd->add_option("--split", split, "dev|eval (SID reference resolution)");
    score_cmd->add_option("--workers", workers, "concurrent per-file scoring");

    // sweep-dcf
    auto* sweep_cmd = app.add_subcommand("sweep-dcf",
                                         "SAD confidence-threshold sweep for minimum DCF");
    std::string sw_ref, sw_sys, sw_report;
    int sw_workers = default_workers();
    sweep_cmd->add_option("--ref,-r", sw_ref, "reference SAD file or directory")->required();
    sweep_cmd->add_option("--sys,-s", sw_sys, "system SAD file or directory")->required();
    sweep_cmd->add_option("--report", sw_report, "write the JSON report here");
    sweep_cmd->add_option("--workers", sw_workers, "concurrent per-file scoring");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Validate label files");
    std::string v_task;
    std::vector<std::string> v_paths;
    validate_cmd->add_option("--task", v_task, "SAD|SD|SID|ASR|SENTIMENT|UEM")->required();
    validate_cmd->add_option("paths", v_paths, "files or directories")->required();

    // gen-fixtures
    auto* gen_cmd = app.add_subcommand("gen-fixtures",
                                       "Generate seeded synthetic reference/system bundles");
    std::string g_out, g_preset;
    std::uint64_t g_seed = 1;
    int g_files = 1, g_sid_trials = 0;
    double g_span_minutes = 31.0;
    fixtures::PlantedRates g_rates;
    gen_cmd->add_option("--out", g_out, "output directory")->required();
    gen_cmd->add_option("--seed", g_seed, "generator seed");
    gen_cmd->add_option("--files", g_files, "number of files");
    gen_cmd->add_option("--preset", g_preset, "channel preset (EECOM|FD|GNC|MOCR|NTWK)");
    gen_cmd->add_option("--span-minutes", g_span_minutes, "file duration in minutes");
    gen_cmd->add_option("--sid-trials", g_sid_trials, "SID trials per file");
    gen_cmd->add_option("--p-miss", g_rates.p_miss, "planted miss rate");
    gen_cmd->add_option("--p-fa", g_rates.p_fa, "planted false-alarm rate");
    gen_cmd->add_option("--speaker-confusion", g_rates.speaker_confusion,
                        "planted speaker confusion rate");
    gen_cmd->add_option("--wer-target", g_rates.wer_target, "planted token error rate");
    gen_cmd->add_option("--sentiment-flip", g_rates.sentiment_flip,
                        "planted polarity flip rate");

    // package
    auto* package_cmd = app.add_subcommand("package", "Validate and archive a submission");
    std::string p_outputs, p_description, p_archive, p_trials;
    package_cmd->add_option("--outputs", p_outputs, "directory of system output files")
        ->required();
    package_cmd->add_option("--description", p_description,
                            "system description JSON")->required();
    package_cmd->add_option("--out", p_archive, "archive path (.tgz)")->required();
    package_cmd->add_option("--trials", p_trials, "SID trial list to cross-check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (score_cmd->parsed()) {
            if (task == "sad")
                return run_score_sad(ref_path, sys_path, uem_path, report_path,
                                     workers, false);
            if (task == "sd")
                return run_score_sd(ref_path, sys_path, uem_path, report_path, workers);
            if (task == "sid")
                return run_score_sid(ref_path, sys_path, split, report_path);
            if (task == "asr")
                return run_score_asr(ref_path, sys_path, report_path, workers);
            if (task == "sentiment")
                return run_score_sentiment(ref_path, sys_path, report_path, workers);
            std::cerr << "error: unknown task '" << task << "'\n";
            return kExitUsage;
        }
        if (sweep_cmd->parsed())
            return run_score_sad(sw_ref, sw_sys, {}, sw_report, sw_workers, true);
        if (validate_cmd->parsed()) return run_validate(v_task, v_paths);
        if (gen_cmd->parsed())
            return run_gen_fixtures(g_out, g_seed, g_files, g_preset, g_span_minutes,
                                    g_sid_trials, g_rates);
        if (package_cmd->parsed()) {
            package::Options opts;
            opts.outputs_dir = p_outputs;
            opts.description_path = p_description;
            opts.archive_path = p_archive;
            opts.trial_list = p_trials;
            package::Result result = package::build(opts);
            for (const std::string& w : result.warnings)
                std::cerr << "warning: " << w << "\n";
            std::cout << "packaged " << result.packaged_files.size() << " output file(s) into "
                      << p_archive << "\n";
            return kExitOk;
        }
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
