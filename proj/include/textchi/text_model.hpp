#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace textchi {

// A loaded document. `content` always holds valid UTF-8.
struct Document {
    std::string content;
    std::string source_id;
};

// Ordered word tokens of a document. Tokens are non-empty and contain no
// whitespace; the word count is words.size().
struct WordSequence {
    std::vector<std::string> words;

    std::size_t size() const noexcept { return words.size(); }
    bool operator==(const WordSequence&) const = default;
};

enum class Encoding {
    Utf8,
    Latin1, // fallback single-byte decoding for legacy corpora
};

// Validates raw bytes as UTF-8 (or transcodes Latin-1 to UTF-8) and wraps
// them in a Document. Invalid UTF-8 raises InvalidEncoding.
Document make_document(std::string bytes, std::string source_id,
                       Encoding encoding = Encoding::Utf8);

Document load_document(const std::filesystem::path& path,
                       Encoding encoding = Encoding::Utf8);

bool is_valid_utf8(std::string_view bytes) noexcept;

// Maximal runs of non-whitespace characters, in order. Whitespace is the
// Unicode White_Space set; punctuation and case are kept as-is.
// Throws EmptyDocument when nothing remains.
WordSequence tokenize(const Document& doc);
WordSequence tokenize(std::string_view utf8_text);

// Tokens joined by a single ASCII space, UTF-8 encoded.
std::string serialize(const WordSequence& seq);

// Number of Unicode code points in the content.
std::size_t symbol_count(const Document& doc) noexcept;
std::size_t symbol_count(std::string_view utf8_text) noexcept;

// Prefix of at most `symbols` code points, shortened further so that it
// never ends inside a word.
std::string_view truncate_to_word_boundary(std::string_view utf8_text,
                                           std::size_t symbols) noexcept;

} // namespace textchi
