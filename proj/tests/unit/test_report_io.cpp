#include <doctest.h>

#include <sstream>

#include "textchi/report_io.hpp"

using namespace textchi;

TEST_CASE("chi report json fields") {
    ChiReport r;
    r.chi = 1.25;
    r.v0 = 400;
    r.plateau_mean = 500.0;
    r.fluctuation_ratio = 0.1;
    r.verdict = Verdict::CoherentText;
    r.symbols = 1234;
    const auto j = to_json(r);
    CHECK(j["chi"] == 1.25);
    CHECK(j["v0"] == 400);
    CHECK(j["plateau_k_start"] == 6);
    CHECK(j["verdict"] == "coherent_text");
    CHECK(j["symbols"] == 1234);
}

TEST_CASE("run config records backend parameters") {
    AnalysisConfig cfg;
    auto j = run_config_json(cfg);
    CHECK(j["backend"]["name"] == "builtin_lz");
    CHECK(j["backend"]["window_size"] == 32768);
    CHECK(j["backend"]["match_cost_bits"] == 25);
    CHECK(j["max_k"] == 20);
    CHECK(j["swap_divisor"] == 10);
    cfg.backend.backend = Backend::GzipStream;
    cfg.backend.gzip_level = 9;
    j = run_config_json(cfg);
    CHECK(j["backend"]["name"] == "gzip_stream");
    CHECK(j["backend"]["gzip_level"] == 9);
    CHECK(j["backend"]["encoder"] == gzip_encoder_id());
}

TEST_CASE("curve csv") {
    VolumeCurve c;
    c.volumes = {10, 12, 13};
    c.swaps = {0, 5, 10};
    std::ostringstream out;
    write_curve_csv(out, c);
    CHECK(out.str() == "k,swaps,bytes\n0,0,10\n1,5,12\n2,10,13\n");
}

TEST_CASE("corpus report survives a json round trip") {
    CorpusReport r;
    r.threshold = 1.0;
    r.base_seed = 7;
    CorpusEntry a;
    a.source_id = "a, \"quoted\".txt";
    a.chi = 1.0625;
    a.symbols = 9000;
    a.words = 1500;
    a.verdict = Verdict::CoherentText;
    a.seed = 7;
    CorpusEntry s;
    s.source_id = "tiny.txt";
    s.symbols = 3;
    s.words = 1;
    s.verdict = Verdict::Skipped;
    s.seed = 6;
    r.entries = {s, a};
    finalize_report(r);

    const auto j = to_json(r);
    CHECK(j["entries"][0]["rank"] == 1);
    CHECK(j["entries"][1]["chi"].is_null());
    CHECK(j["run_config"]["base_seed"] == 7);
    CHECK(j["failing_mean_symbols"].is_null());

    const CorpusReport back = corpus_report_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.entries.size() == 2);
    CHECK(back.entries[0].source_id == a.source_id);
    CHECK(*back.entries[0].chi == 1.0625);
    CHECK(back.entries[1].verdict == Verdict::Skipped);
    CHECK(back.pass_fraction == r.pass_fraction);
    CHECK(back.base_seed == 7);

    std::ostringstream csv;
    write_corpus_csv(csv, r);
    CHECK(csv.str() ==
          "rank,source_id,chi,symbols,verdict\n"
          "1,\"a, \"\"quoted\"\".txt\",1.062500000,9000,coherent_text\n"
          "2,tiny.txt,,3,skipped\n");
}

TEST_CASE("malformed report json") {
    CHECK_THROWS(corpus_report_from_json(nlohmann::json::parse(R"({"entries": []})")));
    CHECK_THROWS(corpus_report_from_json(
        nlohmann::json::parse(R"({"threshold": 1.0, "entries": [{"source_id": 3}]})")));
}

TEST_CASE("length csv") {
    const std::vector<LengthPoint> series = {{10000, 9995, 1700, 1.05}, {20000, 19990, 3400, 1.0625}};
    std::ostringstream out;
    write_length_csv(out, series);
    CHECK(out.str() == "length,symbols,words,chi\n10000,9995,1700,1.050000000\n20000,19990,3400,1.062500000\n");
}
