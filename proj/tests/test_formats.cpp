#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "speechscore/formats.hpp"
#include "speechscore/prng.hpp"
#include "speechscore/sid.hpp"

using namespace speechscore;

TEST_CASE("rttm example lines") {
    std::string text =
        "SPEAKER FS_P01_dev_001 1 256.04 2.35 <NA> <NA> EECOM1 <NA>\n"
        "SPEAKER FS_P01_dev_001 1 368.97 2.22 <NA> <NA> GNC1 <NA>\n";
    auto turns = parse_rttm(text);
    REQUIRE(turns.size() == 2);
    CHECK(turns[0] == RttmTurn{"FS_P01_dev_001", 256040, 2350, "EECOM1"});
    CHECK(turns[1] == RttmTurn{"FS_P01_dev_001", 368970, 2220, "GNC1"});
    CHECK(serialize_rttm(turns) == text);
    CHECK(parse_rttm(serialize_rttm(turns)) == turns);
}

TEST_CASE("rttm errors carry provenance") {
    try {
        parse_rttm("SPEAKER f 1 bad 2.35 <NA> <NA> A <NA>\n",
                   {.source_name = "x.rttm"});
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.file() == "x.rttm");
        CHECK(e.line() == 1);
        CHECK(std::string(e.what()).find("x.rttm") != std::string::npos);
    }
}

TEST_CASE("rttm file-id mismatch drops turns with warning") {
    std::vector<std::string> warnings;
    ParseOptions opts;
    opts.expected_file_id = "FS_P01_dev_001";
    opts.warnings = &warnings;
    auto turns = parse_rttm(
        "SPEAKER FS_P01_dev_001 1 1 1 <NA> <NA> A <NA>\n"
        "SPEAKER other_file 1 2 1 <NA> <NA> B <NA>\n",
        opts);
    CHECK(turns.size() == 1);
    CHECK(warnings.size() == 1);
}

TEST_CASE("rttm system output rejects UNK") {
    ParseOptions opts;
    opts.system_output = true;
    CHECK_THROWS_AS(
        parse_rttm("SPEAKER f 1 1 1 <NA> <NA> UNK <NA>\n", opts), FormatError);
    CHECK_NOTHROW(parse_rttm("SPEAKER f 1 1 1 <NA> <NA> UNK <NA>\n"));
}

TEST_CASE("uem example lines") {
    std::string text =
        "FS_P01_dev_001 1 234.32 737.54\n"
        "FS_P01_eval_007 1 124.46 624.23\n";
    auto regions = parse_uem(text);
    REQUIRE(regions.size() == 2);
    CHECK(regions[0] == UemRegion{"FS_P01_dev_001", 1, {234320, 737540}});
    CHECK(regions[1] == UemRegion{"FS_P01_eval_007", 1, {124460, 624230}});
    CHECK(serialize_uem(regions) == text);
}

TEST_CASE("sad example line") {
    std::string text = "X\tX\tX\tSAD\tX\t0.00\t5.77\tspeech\t0.500000\n";
    auto records = parse_sad(text, SadMode::system);
    REQUIRE(records.size() == 1);
    CHECK(records[0].file_id == "X");
    CHECK(records[0].span == Interval{0, 5770});
    CHECK(records[0].kind == SadKind::speech);
    CHECK(records[0].confidence == 0.5);
    CHECK(parse_sad(serialize_sad(records, SadMode::system), SadMode::system) ==
          records);
}

TEST_CASE("sad overlap rejected citing both lines") {
    std::string text =
        "X\tX\tX\tSAD\tX\t0.00\t5.77\tspeech\t0.5\n"
        "X\tX\tX\tSAD\tX\t5.13\t6.37\tnon-speech\t0.5\n";
    try {
        parse_sad(text, SadMode::system);
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        std::string msg = e.what();
        CHECK(msg.find("1") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
        CHECK(msg.find("overlap") != std::string::npos);
    }
}

TEST_CASE("sad reference S NS labels") {
    std::string text =
        "X\tX\tX\tSAD\tf\t0\t2\tS\n"
        "X\tX\tX\tSAD\tf\t2\t4\tNS\n";
    auto records = parse_sad(text, SadMode::reference);
    REQUIRE(records.size() == 2);
    CHECK(records[0].kind == SadKind::speech);
    CHECK(records[1].kind == SadKind::nonspeech);
    CHECK_FALSE(records[0].confidence.has_value());
}

TEST_CASE("sad whitespace fallback warns") {
    std::vector<std::string> warnings;
    ParseOptions opts;
    opts.warnings = &warnings;
    auto records = parse_sad("X X X SAD X 0.00 5.77 speech 0.5\n",
                             SadMode::system, opts);
    CHECK(records.size() == 1);
    CHECK_FALSE(warnings.empty());
}

TEST_CASE("sid example lines") {
    std::string text =
        "FS_P01_dev_FD1_001 FD1 GNC1 INCO NEIL BUZZ\n"
        "FS_P01_eval_005 FIDO GNC1 GUIDANCE NEIL BUZZ\n";
    auto preds = parse_sid_output(text);
    REQUIRE(preds.size() == 2);
    CHECK(preds[0].segment_id == "FS_P01_dev_FD1_001");
    CHECK(preds[0].predictions ==
          std::array<std::string, 5>{"FD1", "GNC1", "INCO", "NEIL", "BUZZ"});
    CHECK(preds[1].segment_id == "FS_P01_eval_005");
    CHECK(serialize_sid_output(preds) == text);
}

TEST_CASE("sid duplicate prediction labels rejected") {
    CHECK_THROWS_AS(parse_sid_output("seg A B C D A\n"), FormatError);
}

TEST_CASE("transcript example entries") {
    std::string text =
        "[{\"speakerID\":\"NEIL\",\"words\":\"It's one small step for man,\","
        "\"sentiment\":\"POSITIVE\",\"startTIme\":\"1325.203\",\"endTime\":\"1327.501\"},"
        "{\"speakerID\":\"NEIL\",\"words\":\"one giant leap for mankind.\","
        "\"sentiment\":\"POSITIVE\",\"startTIme\":\"1330.162\",\"endTime\":\"1332.89\"}]";
    auto utts = parse_transcript(text);
    REQUIRE(utts.size() == 2);
    CHECK(utts[0].speaker_id == "NEIL");
    CHECK(utts[0].words == "It's one small step for man,");
    CHECK(utts[0].sentiment == Sentiment::positive);
    CHECK(utts[0].span == Interval{1325203, 1327501});
    CHECK(utts[1].span == Interval{1330162, 1332890});

    std::string out = serialize_transcript(utts);
    CHECK(out.find("startTime") != std::string::npos);
    CHECK(out.find("startTIme") == std::string::npos);
    CHECK(parse_transcript(out) == utts);
}

TEST_CASE("speaker label from filename") {
    CHECK(ref_label_from_filename("FS_P01_dev_FD1_001", Split::dev) == "FD1");
    CHECK_FALSE(ref_label_from_filename("FS_P01_eval_005", Split::eval).has_value());
    CHECK_THROWS_AS(ref_label_from_filename("random.wav", Split::dev), FormatError);
}

TEST_CASE("sid key file round-trip") {
    auto keys = sid::parse_key_file("seg_001 FD1\nseg_002 GNC1\n");
    REQUIRE(keys.size() == 2);
    CHECK(keys[0] == std::pair<std::string, std::string>{"seg_001", "FD1"});
    CHECK(sid::parse_key_file(sid::serialize_key_file(keys)) == keys);
}

TEST_CASE("system description round-trip") {
    SystemDescription d;
    d.task = "SAD";
    d.abstract = "energy threshold detector";
    d.data_resources = "fixtures only";
    d.algorithm = "band energy plus hangover smoothing";
    d.hardware = {8, "x86-64", 0, "none", "16 GB", "1 GB", "none", "45 s"};
    auto parsed = parse_system_description(serialize_system_description(d));
    CHECK(parsed.task == "SAD");
    CHECK(parsed.hardware.cpu_cores == 8);
    CHECK(parsed.hardware.runtime_per_30min_file == "45 s");
}

TEST_CASE("random sad record round-trip") {
    Prng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<SadRecord> records;
        Tick at = 0;
        int n = 1 + static_cast<int>(rng.below(10));
        for (int i = 0; i < n; ++i) {
            SadRecord r;
            r.file_id = "f";
            r.span.onset = at;
            at += 1 + static_cast<Tick>(rng.below(5000));
            r.span.offset = at;
            at += static_cast<Tick>(rng.below(3000));
            r.kind = rng.bernoulli(0.5) ? SadKind::speech : SadKind::nonspeech;
            r.confidence = static_cast<double>(rng.below(1000)) / 1000.0;
            records.push_back(r);
        }
        CHECK(parse_sad(serialize_sad(records, SadMode::system), SadMode::system) ==
              records);
    }
}

TEST_CASE("crlf tolerated") {
    auto regions = parse_uem("f 1 0 10\r\nf 1 20 30\r\n");
    CHECK(regions.size() == 2);
}
