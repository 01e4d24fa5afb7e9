#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "speechscore/package.hpp"
#include "speechscore/report.hpp"

using namespace speechscore;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir(const char* stem) {
        path = fs::temp_directory_path() / (std::string("speechscore_test_") + stem);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

std::string description_json(const std::string& task) {
    SystemDescription d;
    d.task = task;
    d.abstract = "threshold detector over band energies";
    d.data_resources = "synthetic fixtures";
    d.algorithm = "energy gate with hangover smoothing";
    d.hardware = {4, "generic x86-64", 0, "none", "8 GB", "1 GB", "none", "40 s"};
    return serialize_system_description(d);
}

}  // namespace

TEST_CASE("digest is stable and content sensitive") {
    CHECK(report::digest("") == "cbf29ce484222325");
    CHECK(report::digest("abc") == report::digest("abc"));
    CHECK(report::digest("abc") != report::digest("abd"));
    CHECK(report::digest("abc").size() == 16);
}

TEST_CASE("rational json carries exact and decimal forms") {
    auto j = report::to_json(Rational(1, 89));
    CHECK(j["num"] == 1);
    CHECK(j["den"] == 89);
    CHECK(j["decimal"] == "0.011236");
    CHECK(report::to_json(Rational(3, 8))["decimal"] == "0.375000");
}

TEST_CASE("report render is deterministic") {
    report::Builder b;
    b.task = "SAD";
    b.inputs.push_back({"ref", "ref.txt", report::digest("ref bytes")});
    sad::Score s;
    s.tp = 100;
    s.dcf = Rational(1, 89);
    b.add_file("f1", report::to_json(s), {"a warning"});
    b.aggregate = report::to_json(s);
    std::string once = b.render();
    CHECK(once == b.render());
    CHECK(once.find("\"schema_version\": 1") != std::string::npos);
    CHECK(once.find("0.011236") != std::string::npos);
}

TEST_CASE("package builds a gzip archive for valid outputs") {
    TempDir tmp("pkg_ok");
    fs::create_directories(tmp.path / "outputs");
    write(tmp.path / "outputs" / "f1.sad.txt",
          "X\tX\tX\tSAD\tf1\t0\t5\tspeech\t0.9\nX\tX\tX\tSAD\tf1\t5\t10\tnon-speech\t0.2\n");
    write(tmp.path / "description.json", description_json("SAD"));

    package::Options opts;
    opts.outputs_dir = tmp.path / "outputs";
    opts.description_path = tmp.path / "description.json";
    opts.archive_path = tmp.path / "submission.tgz";
    auto result = package::build(opts);
    CHECK(result.packaged_files == std::vector<std::string>{"f1.sad.txt"});

    std::ifstream in(opts.archive_path, std::ios::binary);
    REQUIRE(in.good());
    unsigned char magic[2] = {};
    in.read(reinterpret_cast<char*>(magic), 2);
    CHECK(magic[0] == 0x1f);  // gzip
    CHECK(magic[1] == 0x8b);
}

TEST_CASE("package rejects invalid outputs") {
    TempDir tmp("pkg_bad");
    fs::create_directories(tmp.path / "outputs");
    write(tmp.path / "outputs" / "f1.sad.txt",
          "X\tX\tX\tSAD\tf1\t0.00\t5.77\tspeech\t0.5\n"
          "X\tX\tX\tSAD\tf1\t5.13\t6.37\tnon-speech\t0.5\n");
    write(tmp.path / "description.json", description_json("SAD"));

    package::Options opts;
    opts.outputs_dir = tmp.path / "outputs";
    opts.description_path = tmp.path / "description.json";
    opts.archive_path = tmp.path / "submission.tgz";
    CHECK_THROWS_AS(package::build(opts), FormatError);
}

TEST_CASE("missing hardware section names the requirement") {
    TempDir tmp("pkg_hw");
    fs::create_directories(tmp.path / "outputs");
    write(tmp.path / "outputs" / "f1.sad.txt",
          "X\tX\tX\tSAD\tf1\t0\t5\tspeech\t0.9\n");
    write(tmp.path / "description.json",
          "{\"task\":\"SAD\",\"abstract\":\"a\",\"data_resources\":\"b\","
          "\"algorithm\":\"c\"}\n");

    package::Options opts;
    opts.outputs_dir = tmp.path / "outputs";
    opts.description_path = tmp.path / "description.json";
    opts.archive_path = tmp.path / "submission.tgz";
    try {
        package::build(opts);
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.field() == "Hardware requirements");
        CHECK(std::string(e.what()).find("Hardware requirements") !=
              std::string::npos);
    }
}

TEST_CASE("sid package cross-checks the trial list") {
    TempDir tmp("pkg_sid");
    fs::create_directories(tmp.path / "outputs");
    write(tmp.path / "outputs" / "preds.txt",
          "FS_P01_dev_FD1_001 FD1 GNC1 INCO NEIL BUZZ\n");
    write(tmp.path / "description.json", description_json("SID"));
    write(tmp.path / "trials.txt",
          "FS_P01_dev_FD1_001 FD1\nFS_P01_dev_GNC1_002 GNC1\n");

    package::Options opts;
    opts.outputs_dir = tmp.path / "outputs";
    opts.description_path = tmp.path / "description.json";
    opts.archive_path = tmp.path / "submission.tgz";
    opts.trial_list = tmp.path / "trials.txt";
    try {
        package::build(opts);
        FAIL("expected runtime_error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("FS_P01_dev_GNC1_002") != std::string::npos);
    }

    write(tmp.path / "outputs" / "preds.txt",
          "FS_P01_dev_FD1_001 FD1 GNC1 INCO NEIL BUZZ\n"
          "FS_P01_dev_GNC1_002 GNC1 FD1 INCO NEIL BUZZ\n");
    CHECK_NOTHROW(package::build(opts));
}

TEST_CASE("rational decimal rounds half even") {
    CHECK(Rational(1, 8).decimal(2) == "0.12");
    CHECK(Rational(3, 8).decimal(2) == "0.38");
    CHECK(Rational(1, 2).decimal(0) == "0");
    CHECK(Rational(3, 2).decimal(0) == "2");
    CHECK(Rational(7, 76).decimal(6) == "0.092105");
}
