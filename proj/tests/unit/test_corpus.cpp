#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "textchi/corpus.hpp"
#include "textchi/error.hpp"
#include "textchi/zipf_synth.hpp"

using namespace textchi;

namespace {

const Document& moby() {
    static const Document d = load_document(std::string(TEXTCHI_TEST_DATA) + "/moby_dick.txt");
    return d;
}

// Consecutive ~n-symbol fragments of the book, cut at word boundaries.
std::vector<Document> book_fragments(std::size_t count, std::size_t symbols) {
    std::vector<Document> out;
    std::string_view rest = moby().content;
    for (std::size_t i = 0; i < count; ++i) {
        const std::string_view piece = truncate_to_word_boundary(rest, symbols);
        out.push_back(make_document(std::string(piece), "book_" + std::to_string(i)));
        rest.remove_prefix(piece.size());
    }
    return out;
}

CorpusEntry entry(std::string id, std::optional<double> chi, std::size_t symbols) {
    CorpusEntry e;
    e.source_id = std::move(id);
    e.chi = chi;
    e.symbols = symbols;
    e.verdict = chi ? (*chi > 1.0 ? Verdict::CoherentText : Verdict::WordSet) : Verdict::Skipped;
    return e;
}

} // namespace

TEST_CASE("empty corpus") {
    try {
        analyze_corpus({}, 1);
        FAIL("expected EmptyCorpus");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyCorpus);
    }
}

TEST_CASE("single coherent document passes, matching single-document analysis") {
    const std::vector<Document> docs = book_fragments(1, 60000);
    const auto report = analyze_corpus(docs, 42);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.pass_fraction == 1.0);
    CHECK_FALSE(report.failing_mean_symbols.has_value());
    CHECK(report.entries[0].seed == 42);
    CHECK(*report.entries[0].chi == analyze_document(docs[0], 42).chi);
}

TEST_CASE("short documents are kept as skipped") {
    std::vector<Document> docs = book_fragments(2, 8000);
    docs.push_back(make_document("solitary", "one_word"));
    docs.push_back(make_document(" \n ", "blank"));
    const auto report = analyze_corpus(docs, 3);
    REQUIRE(report.entries.size() == 4);
    CHECK(report.skipped == 2);
    CHECK(report.entries[2].verdict == Verdict::Skipped);
    CHECK(report.entries[3].verdict == Verdict::Skipped);
    CHECK(report.entries[2].source_id == "blank");
    CHECK_FALSE(report.entries[2].chi.has_value());
    CHECK(report.pass_fraction == doctest::Approx(0.5));
}

TEST_CASE("mixed corpus separates book fragments from Zipf texts") {
    std::vector<Document> docs = book_fragments(6, 10000);
    for (std::uint64_t s = 1; s <= 6; ++s) {
        docs.push_back(generate_zipf_document({}, s, "zipf_" + std::to_string(s)));
    }
    const auto report = analyze_corpus(docs, 7);
    // Books rank strictly above every generated text.
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(report.entries[i].source_id.rfind("book_", 0) == 0);
        CHECK(report.entries[i].verdict == Verdict::CoherentText);
    }
    for (std::size_t i = 6; i < report.entries.size(); ++i) {
        CHECK(std::abs(*report.entries[i].chi - 1.0) <= 0.03);
    }
    // At threshold 1 the Zipf verdicts are decided by sampling noise around
    // chi = 1; a small margin splits the corpus exactly in half.
    CHECK(report.pass_fraction >= 0.5);
    AnalysisConfig margin;
    margin.threshold = 1.02;
    const auto split = analyze_corpus(docs, 7, margin);
    CHECK(split.pass_fraction == doctest::Approx(0.5));
    REQUIRE(split.failing_mean_symbols.has_value());
    CHECK(*split.failing_mean_symbols >= 10000.0);
    CHECK(*split.failing_mean_symbols <= 10012.0);

    // Recomputing pass_fraction from the entries reproduces it.
    const auto passing = std::count_if(report.entries.begin(), report.entries.end(),
                                       [&](const CorpusEntry& e) { return e.chi && *e.chi > report.threshold; });
    CHECK(report.pass_fraction == static_cast<double>(passing) / report.entries.size());

    // Dropping a document leaves every other chi unchanged when the
    // survivors keep their ordinals.
    std::vector<Document> fewer = docs;
    std::vector<std::uint64_t> ordinals;
    for (std::uint64_t i = 0; i < docs.size(); ++i) {
        ordinals.push_back(i);
    }
    fewer.erase(fewer.begin() + 2);
    ordinals.erase(ordinals.begin() + 2);
    const auto reduced = analyze_corpus(fewer, 7, {}, ordinals);
    for (const auto& e : reduced.entries) {
        const auto it = std::find_if(report.entries.begin(), report.entries.end(),
                                     [&](const CorpusEntry& o) { return o.source_id == e.source_id; });
        REQUIRE(it != report.entries.end());
        CHECK(*it->chi == *e.chi);
        CHECK(it->seed == e.seed);
    }
}

TEST_CASE("report is independent of thread count") {
    const std::vector<Document> docs = book_fragments(5, 6000);
    AnalysisConfig serial;
    serial.threads = 1;
    AnalysisConfig pooled;
    pooled.threads = 3;
    const auto a = analyze_corpus(docs, 11, serial);
    const auto b = analyze_corpus(docs, 11, pooled);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].source_id == b.entries[i].source_id);
        CHECK(*a.entries[i].chi == *b.entries[i].chi);
    }
}

TEST_CASE("sorting and summary statistics") {
    CorpusReport r;
    r.entries = {entry("c", 0.9, 500), entry("a", 1.3, 9000), entry("s", std::nullopt, 4),
                 entry("b", 1.1, 7000), entry("d", 1.1, 3000), entry("e", 1.0, 700)};
    finalize_report(r);
    std::vector<std::string> order;
    for (const auto& e : r.entries) {
        order.push_back(e.source_id);
    }
    CHECK(order == std::vector<std::string>{"a", "b", "d", "e", "c", "s"});
    CHECK(r.pass_fraction == doctest::Approx(3.0 / 6.0));
    REQUIRE(r.failing_mean_symbols.has_value());
    CHECK(*r.failing_mean_symbols == doctest::Approx(600.0));
    CHECK(r.skipped == 1);
}

TEST_CASE("rank distribution") {
    CorpusReport r;
    r.entries = {entry("x", 0.9, 1), entry("y", 1.3, 1), entry("z", 1.1, 1)};
    finalize_report(r);
    const auto ranks = rank_distribution(r);
    REQUIRE(ranks.size() == 3);
    CHECK(ranks[0].rank == 1);
    CHECK(ranks[0].chi == 1.3);
    CHECK(ranks[1].chi == 1.1);
    CHECK(ranks[2].rank == 3);
    CHECK(ranks[2].chi == 0.9);

    CorpusReport single;
    single.entries = {entry("only", 1.05, 10)};
    finalize_report(single);
    CHECK(rank_distribution(single).size() == 1);

    Prng prng(5);
    for (int trial = 0; trial < 100; ++trial) {
        CorpusReport random;
        const std::size_t n = prng.next_index(50);
        for (std::size_t i = 0; i < n; ++i) {
            random.entries.push_back(entry(std::to_string(i), 0.5 + prng.next_unit(), 100));
        }
        finalize_report(random);
        const auto rd = rank_distribution(random);
        for (std::size_t i = 1; i < rd.size(); ++i) {
            REQUIRE(rd[i].chi <= rd[i - 1].chi);
            REQUIRE(rd[i].rank == i + 1);
        }
    }
}

TEST_CASE("group comparison") {
    CorpusReport real;
    real.entries = {entry("r1", 1.2, 10000), entry("r2", 1.1, 8000), entry("r3", 0.95, 900)};
    finalize_report(real);

    const auto same = compare_groups(real, real);
    CHECK(same.overlap == 2); // r3 is too short to set the reference
    CHECK(*same.real_reference_chi == 1.1);

    CorpusReport long_real;
    long_real.entries = {entry("r1", 1.2, 10000), entry("r2", 1.1, 8000)};
    finalize_report(long_real);
    CHECK(compare_groups(long_real, long_real).overlap == long_real.entries.size());

    CorpusReport art;
    art.entries = {entry("a1", 1.0, 10000), entry("a2", 1.15, 10000), entry("a3", 0.99, 10000)};
    finalize_report(art);
    const auto c = compare_groups(real, art);
    CHECK(c.overlap == 1);
    CHECK(c.real.count == 3);
    CHECK(c.real.min == 0.95);
    CHECK(c.real.max == 1.2);
    CHECK(c.artificial.mean == doctest::Approx((1.0 + 1.15 + 0.99) / 3));

    CorpusReport empty;
    CHECK_THROWS_AS(compare_groups(real, empty), Error);
    CorpusReport only_skipped;
    only_skipped.entries = {entry("s", std::nullopt, 3)};
    CHECK_THROWS_AS(compare_groups(only_skipped, real), Error);
}
