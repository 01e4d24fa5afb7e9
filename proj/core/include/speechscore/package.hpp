#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "speechscore/formats.hpp"

namespace speechscore::package {

struct Options {
    std::filesystem::path outputs_dir;
    std::filesystem::path description_path;
    std::filesystem::path archive_path;  // .tgz
    // SID only: trial list (key file or one segment id per line) the
    // output must cover; missing segments fail the package.
    std::filesystem::path trial_list;
};

struct Result {
    std::vector<std::string> packaged_files;
    std::vector<std::string> warnings;
};

// Validates the system description, validates every output file for the
// declared task, and writes a gzip'd ustar archive containing
// manifest.json, description.json and outputs/. Throws FormatError or
// std::runtime_error on any validation failure.
Result build(const Options& opts);

}  // namespace speechscore::package
