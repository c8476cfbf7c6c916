#include "textchi/text_model.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>

#include "textchi/error.hpp"

namespace textchi {
namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point starting at text[pos]; advances pos. Returns
// kInvalid for malformed, overlong or surrogate sequences.
char32_t decode_one(std::string_view text, std::size_t& pos) noexcept {
    const auto lead = static_cast<unsigned char>(text[pos]);
    if (lead < 0x80) {
        ++pos;
        return lead;
    }
    std::size_t extra = 0;
    char32_t cp = 0;
    char32_t min_cp = 0;
    if ((lead & 0xE0) == 0xC0) {
        extra = 1;
        cp = lead & 0x1F;
        min_cp = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
        extra = 2;
        cp = lead & 0x0F;
        min_cp = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
        extra = 3;
        cp = lead & 0x07;
        min_cp = 0x10000;
    } else {
        ++pos;
        return kInvalid;
    }
    if (pos + extra >= text.size()) {
        pos = text.size();
        return kInvalid;
    }
    for (std::size_t i = 1; i <= extra; ++i) {
        const auto c = static_cast<unsigned char>(text[pos + i]);
        if ((c & 0xC0) != 0x80) {
            pos += i;
            return kInvalid;
        }
        cp = (cp << 6) | (c & 0x3F);
    }
    pos += extra + 1;
    if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        return kInvalid;
    }
    return cp;
}

// Unicode White_Space property.
constexpr bool is_space(char32_t cp) noexcept {
    return (cp >= 0x09 && cp <= 0x0D) || cp == 0x20 || cp == 0x85 || cp == 0xA0 ||
           cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 ||
           cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

constexpr bool is_continuation(char c) noexcept {
    return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

std::string latin1_to_utf8(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size() + bytes.size() / 8);
    for (const char ch : bytes) {
        const auto c = static_cast<unsigned char>(ch);
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back(static_cast<char>(0xC0 | (c >> 6)));
            out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
        }
    }
    return out;
}

} // namespace

bool is_valid_utf8(std::string_view bytes) noexcept {
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        if (decode_one(bytes, pos) == kInvalid) {
            return false;
        }
    }
    return true;
}

Document make_document(std::string bytes, std::string source_id, Encoding encoding) {
    if (encoding == Encoding::Latin1) {
        return {latin1_to_utf8(bytes), std::move(source_id)};
    }
    if (!is_valid_utf8(bytes)) {
        throw Error(ErrorCode::InvalidEncoding,
                    "'" + source_id + "' is not valid UTF-8 (use the latin-1 fallback for legacy files)");
    }
    return {std::move(bytes), std::move(source_id)};
}

Document load_document(const std::filesystem::path& path, Encoding encoding) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    }
    std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return make_document(std::move(bytes), path.filename().string(), encoding);
}

WordSequence tokenize(std::string_view text) {
    WordSequence seq;
    std::size_t pos = 0;
    std::size_t word_start = std::string_view::npos;
    while (pos < text.size()) {
        const std::size_t here = pos;
        const char32_t cp = decode_one(text, pos);
        if (is_space(cp)) {
            if (word_start != std::string_view::npos) {
                seq.words.emplace_back(text.substr(word_start, here - word_start));
                word_start = std::string_view::npos;
            }
        } else if (word_start == std::string_view::npos) {
            word_start = here;
        }
    }
    if (word_start != std::string_view::npos) {
        seq.words.emplace_back(text.substr(word_start));
    }
    if (seq.words.empty()) {
        throw Error(ErrorCode::EmptyDocument, "no words in document");
    }
    return seq;
}

WordSequence tokenize(const Document& doc) {
    try {
        return tokenize(std::string_view(doc.content));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::EmptyDocument) {
            throw Error(ErrorCode::EmptyDocument, "no words in '" + doc.source_id + "'");
        }
        throw;
    }
}

std::string serialize(const WordSequence& seq) {
    std::size_t total = seq.words.empty() ? 0 : seq.words.size() - 1;
    for (const auto& w : seq.words) {
        total += w.size();
    }
    std::string out;
    out.reserve(total);
    for (std::size_t i = 0; i < seq.words.size(); ++i) {
        if (i != 0) {
            out.push_back(' ');
        }
        out += seq.words[i];
    }
    return out;
}

std::size_t symbol_count(std::string_view text) noexcept {
    std::size_t n = 0;
    for (const char c : text) {
        n += is_continuation(c) ? 0 : 1;
    }
    return n;
}

std::size_t symbol_count(const Document& doc) noexcept { return symbol_count(doc.content); }

std::string_view truncate_to_word_boundary(std::string_view text, std::size_t symbols) noexcept {
    std::size_t pos = 0;
    std::size_t seen = 0;
    while (pos < text.size() && seen < symbols) {
        decode_one(text, pos);
        ++seen;
    }
    if (pos >= text.size()) {
        return text;
    }
    // Cut falls inside a word when the next character is not whitespace:
    // back off to the start of that word.
    std::size_t probe = pos;
    if (is_space(decode_one(text, probe))) {
        return text.substr(0, pos);
    }
    std::size_t scan = 0;
    std::size_t last_space_end = 0;
    while (scan < pos) {
        if (is_space(decode_one(text, scan))) {
            last_space_end = scan;
        }
    }
    return text.substr(0, last_space_end);
}

} // namespace textchi
