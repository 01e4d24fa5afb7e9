#include "speechscore/package.hpp"

#include <algorithm>
#include <cstring>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>
#include <zlib.h>

#include "speechscore/report.hpp"
#include "speechscore/sid.hpp"

namespace speechscore::package {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Minimal ustar writer into a gzip stream.
class TarGz {
public:
    explicit TarGz(const fs::path& path) {
        gz_ = gzopen(path.string().c_str(), "wb9");
        if (!gz_) throw std::runtime_error("cannot create " + path.string());
    }
    ~TarGz() { close(); }

    void add(const std::string& name, const std::string& content, time_t mtime) {
        char header[512];
        std::memset(header, 0, sizeof(header));
        if (name.size() > 99) throw std::runtime_error("archive member name too long");
        std::memcpy(header, name.c_str(), name.size());
        std::snprintf(header + 100, 8, "%07o", 0644);
        std::snprintf(header + 108, 8, "%07o", 0);
        std::snprintf(header + 116, 8, "%07o", 0);
        std::snprintf(header + 124, 12, "%011llo",
                      static_cast<unsigned long long>(content.size()));
        std::snprintf(header + 136, 12, "%011llo",
                      static_cast<unsigned long long>(mtime));
        header[156] = '0';  // regular file
        std::memcpy(header + 257, "ustar", 6);
        std::memcpy(header + 263, "00", 2);
        std::memset(header + 148, ' ', 8);
        unsigned checksum = 0;
        for (unsigned char c : header) checksum += c;
        std::snprintf(header + 148, 8, "%06o", checksum);
        header[155] = ' ';
        write(header, sizeof(header));
        write(content.data(), content.size());
        std::size_t pad = (512 - content.size() % 512) % 512;
        char zeros[512] = {};
        if (pad) write(zeros, pad);
    }

    void close() {
        if (!gz_) return;
        char zeros[1024] = {};  // two terminating blocks
        write(zeros, sizeof(zeros));
        gzclose(gz_);
        gz_ = nullptr;
    }

private:
    void write(const char* data, std::size_t size) {
        if (gzwrite(gz_, data, static_cast<unsigned>(size)) !=
            static_cast<int>(size))
            throw std::runtime_error("gzip write failed");
    }
    gzFile gz_ = nullptr;
};

void validate_output(const std::string& task, const fs::path& path,
                     const std::string& content, Result& result) {
    ParseOptions opts;
    opts.source_name = path.string();
    opts.system_output = true;
    opts.warnings = &result.warnings;
    if (task == "SAD") parse_sad(content, SadMode::system, opts);
    else if (task == "SD") parse_rttm(content, opts);
    else if (task == "SID") parse_sid_output(content, opts);
    else parse_transcript(content, opts);  // ASR, SENTIMENT
}

}  // namespace

Result build(const Options& opts) {
    Result result;

    std::string description_text = read_file(opts.description_path);
    ParseOptions popts;
    popts.source_name = opts.description_path.string();
    SystemDescription description = parse_system_description(description_text, popts);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opts.outputs_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::runtime_error("no output files in " + opts.outputs_dir.string());

    std::vector<std::pair<std::string, std::string>> contents;
    for (const fs::path& path : files) {
        std::string content = read_file(path);
        validate_output(description.task, path, content, result);
        contents.emplace_back(path.filename().string(), std::move(content));
    }

    if (description.task == "SID" && !opts.trial_list.empty()) {
        std::set<std::string> predicted;
        for (const auto& [name, content] : contents) {
            ParseOptions sopts;
            sopts.source_name = name;
            for (const SidPrediction& p : parse_sid_output(content, sopts))
                predicted.insert(p.segment_id);
        }
        std::string missing;
        std::istringstream lines(read_file(opts.trial_list));
        std::string line;
        while (std::getline(lines, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::string segment = line.substr(0, line.find_first_of(" \t"));
            if (!segment.empty() && !predicted.count(segment))
                missing += (missing.empty() ? "" : ", ") + segment;
        }
        if (!missing.empty())
            throw std::runtime_error("missing predictions for listed trials: " +
                                     missing);
    }

    time_t now = std::time(nullptr);
    json manifest;
    manifest["tool_version"] = report::kToolVersion;
    manifest["task"] = description.task;
    manifest["created"] = static_cast<long long>(now);  // server-side quota stamp
    json members = json::array();
    for (const auto& [name, content] : contents) {
        members.push_back({{"path", "outputs/" + name},
                           {"bytes", content.size()},
                           {"digest", report::digest(content)}});
        result.packaged_files.push_back(name);
    }
    manifest["outputs"] = std::move(members);

    TarGz archive(opts.archive_path);
    archive.add("manifest.json", manifest.dump(2) + "\n", now);
    archive.add("description.json", description_text, now);
    for (const auto& [name, content] : contents)
        archive.add("outputs/" + name, content, now);
    archive.close();
    return result;
}

}  // namespace speechscore::package
