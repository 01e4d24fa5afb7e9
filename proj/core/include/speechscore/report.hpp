#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "speechscore/asr.hpp"
#include "speechscore/diar.hpp"
#include "speechscore/rational.hpp"
#include "speechscore/sad.hpp"
#include "speechscore/sentiment.hpp"
#include "speechscore/sid.hpp"

namespace speechscore::report {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// FNV-1a 64 over the raw bytes, hex encoded. Ties a report to the
// exact inputs it consumed.
std::string digest(std::string_view bytes);

// Rates are emitted as exact {num, den} plus a decimal rounded
// half-even to 6 places, so comparisons never depend on float printing.
nlohmann::json to_json(const Rational& r);

nlohmann::json to_json(const sad::Score& s);
nlohmann::json to_json(const diar::Score& s);
nlohmann::json to_json(const sid::Score& s);
nlohmann::json to_json(const asr::Score& s);
nlohmann::json to_json(const sentiment::Score& s);

struct InputDigest {
    std::string role;  // "ref", "sys", "uem", ...
    std::string path;
    std::string digest;
};

struct Builder {
    std::string task;
    std::vector<InputDigest> inputs;
    nlohmann::json per_file = nlohmann::json::array();
    nlohmann::json aggregate;
    nlohmann::json extra;  // optional task-specific payload (sweep curve, ...)

    void add_file(const std::string& file_id, nlohmann::json score,
                  std::vector<std::string> warnings = {});
    std::string render() const;
};

}  // namespace speechscore::report
