#include <doctest.h>

#include <sstream>
#include <string>

#include "textchi/error.hpp"
#include "textchi/permute.hpp"
#include "textchi/text_model.hpp"

using namespace textchi;

namespace {

Document doc(std::string s) { return make_document(std::move(s), "test"); }

// Plain ASCII whitespace split, written independently of tokenize().
std::vector<std::string> split_ascii(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) {
        out.push_back(w);
    }
    return out;
}

} // namespace

TEST_CASE("tokenize keeps punctuation attached") {
    const auto seq = tokenize(doc("To be, or not to be"));
    CHECK(seq.words == std::vector<std::string>{"To", "be,", "or", "not", "to", "be"});
    CHECK(seq.size() == 6);
}

TEST_CASE("tokenize trims surrounding whitespace") {
    const auto seq = tokenize(doc("  hello "));
    REQUIRE(seq.size() == 1);
    CHECK(seq.words[0] == "hello");
}

TEST_CASE("tokenize splits on unicode whitespace but not on other symbols") {
    // NO-BREAK SPACE, EM SPACE, IDEOGRAPHIC SPACE separate; EM DASH does not.
    const auto seq = tokenize(doc("a b c　d\te\nf—g"));
    CHECK(seq.words == std::vector<std::string>{"a", "b", "c", "d", "e", "f—g"});
}

TEST_CASE("tokenize rejects blank documents") {
    CHECK_THROWS_AS(tokenize(doc("")), Error);
    try {
        tokenize(doc(" \n\t "));
        FAIL("expected EmptyDocument");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyDocument);
    }
}

TEST_CASE("tokenize matches an independent whitespace split on the books") {
    for (const char* name : {"moby_dick.txt", "sotu_1946_truman.txt"}) {
        const Document d = load_document(std::string(TEXTCHI_TEST_DATA) + "/" + name);
        const auto seq = tokenize(d);
        const auto serialized = serialize(seq);
        // The ASCII split is an exact oracle only without non-ASCII spaces.
        REQUIRE(d.content.find("\xc2\xa0") == std::string::npos);
        REQUIRE(d.content.find("\xe3\x80\x80") == std::string::npos);
        CHECK(seq.words == split_ascii(d.content));
        CHECK(seq.size() > 0);
        CHECK(symbol_count(serialized) <= symbol_count(d));
    }
}

TEST_CASE("serialize joins with one space") {
    CHECK(serialize(WordSequence{{"a", "b"}}) == "a b");
    CHECK(serialize(WordSequence{{"To", "be,", "or"}}) == "To be, or");
}

TEST_CASE("serialize length is token bytes plus separators") {
    const WordSequence seq{{"café", "x", "жж"}};
    CHECK(serialize(seq).size() == 5 + 1 + 4 + 2);
}

TEST_CASE("tokenize inverts serialize (random sequences)") {
    Prng prng(99);
    const std::vector<std::string> alphabet = {"a", "b", ",", "é", "—", "Z", "'"};
    for (int trial = 0; trial < 300; ++trial) {
        WordSequence seq;
        const std::size_t n = prng.next_index(40);
        for (std::size_t i = 0; i < n; ++i) {
            std::string w;
            const std::size_t len = prng.next_index(6);
            for (std::size_t j = 0; j < len; ++j) {
                w += alphabet[prng.next_index(alphabet.size()) - 1];
            }
            seq.words.push_back(w);
        }
        CHECK(tokenize(serialize(seq)) == seq);
    }
}

TEST_CASE("symbol_count counts code points") {
    CHECK(symbol_count(doc("abc")) == 3);
    CHECK(symbol_count(doc("")) == 0);
    CHECK(symbol_count(doc("naïve — \U0001F600")) == 9);
}

TEST_CASE("invalid UTF-8 is rejected, latin-1 fallback transcodes") {
    const std::string latin1 = "caf\xe9 na\xefve";
    try {
        make_document(latin1, "legacy.txt");
        FAIL("expected InvalidEncoding");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidEncoding);
    }
    const Document d = make_document(latin1, "legacy.txt", Encoding::Latin1);
    CHECK(d.content == "café naïve");
    CHECK(symbol_count(d) == 10);

    CHECK_FALSE(is_valid_utf8("\xc0\xaf"));         // overlong
    CHECK_FALSE(is_valid_utf8("\xed\xa0\x80"));     // surrogate
    CHECK_FALSE(is_valid_utf8("\xe2\x82"));         // truncated
    CHECK_FALSE(is_valid_utf8("\xf4\x90\x80\x80")); // above U+10FFFF
    CHECK(is_valid_utf8("\xf0\x9f\x98\x80"));
}

TEST_CASE("truncate_to_word_boundary never splits a word") {
    const std::string text = "alpha beta gamma";
    CHECK(truncate_to_word_boundary(text, 100) == text);
    CHECK(truncate_to_word_boundary(text, 16) == text);
    CHECK(truncate_to_word_boundary(text, 10) == "alpha beta");
    CHECK(truncate_to_word_boundary(text, 11) == "alpha beta ");
    CHECK(truncate_to_word_boundary(text, 8) == "alpha ");
    CHECK(truncate_to_word_boundary(text, 3).empty());
    CHECK(truncate_to_word_boundary("éé éé", 4) == "éé ");
}
