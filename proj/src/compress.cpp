#include "textchi/compress.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "textchi/error.hpp"

#ifdef TEXTCHI_HAVE_ZLIB
#include <zlib.h>
#endif

namespace textchi {

void CompressorConfig::validate() const {
    if (min_match < 2) {
        throw Error(ErrorCode::InvalidConfig, "min_match must be at least 2");
    }
    if (max_match < min_match) {
        throw Error(ErrorCode::InvalidConfig, "max_match must be >= min_match");
    }
    if (window_size < max_match) {
        throw Error(ErrorCode::InvalidConfig, "window_size must be >= max_match");
    }
    if (literal_cost == 0 || match_cost == 0) {
        throw Error(ErrorCode::InvalidConfig, "token bit costs must be positive");
    }
}

std::string_view to_string(Backend backend) noexcept {
    return backend == Backend::BuiltinLz ? "builtin_lz" : "gzip_stream";
}

Backend backend_from_string(std::string_view name) {
    if (name == "builtin" || name == "builtin_lz") {
        return Backend::BuiltinLz;
    }
    if (name == "gzip" || name == "gzip_stream") {
        return Backend::GzipStream;
    }
    throw Error(ErrorCode::InvalidConfig, "unknown backend '" + std::string(name) + "'");
}

namespace {

constexpr unsigned kHashBits = 16;
constexpr std::uint32_t kHashSize = 1u << kHashBits;

// Hash chains over the first min(min_match, 3) bytes. Every candidate is
// verified byte by byte, so collisions only cost time; traversal runs
// nearest-first and a candidate replaces the best only when strictly
// longer, which makes the nearest offset win ties.
class MatchFinder {
public:
    MatchFinder(std::span<const std::uint8_t> data, const CompressorConfig& cfg)
        : data_(data),
          cfg_(cfg),
          key_len_(std::min<std::size_t>(cfg.min_match, 3)),
          head_(kHashSize, -1),
          prev_(data.size(), -1) {}

    void insert(std::size_t pos) noexcept {
        if (pos + key_len_ > data_.size()) {
            return;
        }
        const std::uint32_t h = hash(pos);
        prev_[pos] = head_[h];
        head_[h] = static_cast<std::int64_t>(pos);
    }

    // Longest match at pos, or {0, 0} when none reaches min_match.
    Match find(std::size_t pos) const noexcept {
        const std::size_t n = data_.size();
        if (pos + cfg_.min_match > n) {
            return {0, 0};
        }
        const std::size_t limit = std::min(cfg_.max_match, n - pos);
        const std::uint8_t* here = data_.data() + pos;
        std::size_t best_len = cfg_.min_match - 1;
        std::size_t best_off = 0;
        for (std::int64_t cand = head_[hash(pos)]; cand >= 0; cand = prev_[cand]) {
            const std::size_t offset = pos - static_cast<std::size_t>(cand);
            if (offset > cfg_.window_size) {
                break;
            }
            const std::uint8_t* there = data_.data() + cand;
            if (there[best_len] != here[best_len]) {
                continue;
            }
            std::size_t len = 0;
            while (len < limit && there[len] == here[len]) {
                ++len;
            }
            if (len > best_len) {
                best_len = len;
                best_off = offset;
                if (len == limit) {
                    break;
                }
            }
        }
        if (best_off == 0) {
            return {0, 0};
        }
        return {best_off, best_len};
    }

private:
    std::uint32_t hash(std::size_t pos) const noexcept {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < key_len_; ++i) {
            v = (v << 8) | data_[pos + i];
        }
        return (v * 2654435761u) >> (32 - kHashBits);
    }

    std::span<const std::uint8_t> data_;
    const CompressorConfig& cfg_;
    std::size_t key_len_;
    std::vector<std::int64_t> head_;
    std::vector<std::int64_t> prev_;
};

template <typename OnLiteral, typename OnMatch>
void greedy_parse(std::span<const std::uint8_t> data, const CompressorConfig& cfg,
                  OnLiteral&& on_literal, OnMatch&& on_match) {
    if (data.empty()) {
        throw Error(ErrorCode::EmptyInput, "cannot compress empty input");
    }
    cfg.validate();
    MatchFinder finder(data, cfg);
    std::size_t pos = 0;
    while (pos < data.size()) {
        const Match m = finder.find(pos);
        if (m.length == 0) {
            on_literal(data[pos]);
            finder.insert(pos);
            ++pos;
            continue;
        }
        on_match(m);
        for (std::size_t i = 0; i < m.length; ++i) {
            finder.insert(pos + i);
        }
        pos += m.length;
    }
}

std::span<const std::uint8_t> as_bytes(std::string_view s) noexcept {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

} // namespace

std::vector<LzToken> lz_parse(std::span<const std::uint8_t> data, const CompressorConfig& cfg) {
    std::vector<LzToken> tokens;
    greedy_parse(
        data, cfg, [&](std::uint8_t b) { tokens.emplace_back(Literal{b}); },
        [&](const Match& m) { tokens.emplace_back(m); });
    return tokens;
}

std::vector<LzToken> lz_parse(std::string_view data, const CompressorConfig& cfg) {
    return lz_parse(as_bytes(data), cfg);
}

std::vector<std::uint8_t> lz_decode(std::span<const LzToken> tokens) {
    std::vector<std::uint8_t> out;
    for (const auto& token : tokens) {
        if (const auto* lit = std::get_if<Literal>(&token)) {
            out.push_back(lit->byte);
            continue;
        }
        const auto& m = std::get<Match>(token);
        if (m.offset == 0 || m.offset > out.size()) {
            throw Error(ErrorCode::InvalidArgument, "match reaches before start of output");
        }
        const std::size_t from = out.size() - m.offset;
        // Byte-wise so overlapping matches replicate their own output.
        for (std::size_t i = 0; i < m.length; ++i) {
            out.push_back(out[from + i]);
        }
    }
    return out;
}

TokenCounts lz_token_counts(std::span<const std::uint8_t> data, const CompressorConfig& cfg) {
    TokenCounts counts;
    greedy_parse(
        data, cfg, [&](std::uint8_t) { ++counts.literals; },
        [&](const Match&) { ++counts.matches; });
    return counts;
}

CompressedVolume compressed_size(std::span<const std::uint8_t> data, const CompressorConfig& cfg) {
    const TokenCounts counts = lz_token_counts(data, cfg);
    const std::uint64_t bits = counts.literals * cfg.literal_cost + counts.matches * cfg.match_cost;
    return {(bits + 7) / 8, Backend::BuiltinLz};
}

CompressedVolume compressed_size(std::string_view data, const CompressorConfig& cfg) {
    return compressed_size(as_bytes(data), cfg);
}

bool gzip_available() noexcept {
#ifdef TEXTCHI_HAVE_ZLIB
    return true;
#else
    return false;
#endif
}

std::string gzip_encoder_id() {
#ifdef TEXTCHI_HAVE_ZLIB
    return std::string("zlib ") + zlibVersion();
#else
    return {};
#endif
}

namespace {

std::uint64_t gzip_member_size(std::string_view data, int level) {
#ifdef TEXTCHI_HAVE_ZLIB
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    // windowBits 15 + 16 selects the gzip wrapper.
    if (deflateInit2(&zs, level, Z_DEFLATED, 15 + 16, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
        throw Error(ErrorCode::BackendUnavailable, "deflateInit2 failed");
    }
    std::vector<unsigned char> out(deflateBound(&zs, static_cast<uLong>(data.size())) + 64);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = deflate(&zs, Z_FINISH);
    const std::uint64_t size = zs.total_out;
    deflateEnd(&zs);
    if (rc != Z_STREAM_END) {
        throw Error(ErrorCode::BackendUnavailable, "gzip encoder did not finish the stream");
    }
    return size;
#else
    (void)data;
    (void)level;
    throw Error(ErrorCode::BackendUnavailable, "built without a gzip encoder");
#endif
}

} // namespace

CompressedVolume compress_via_backend(std::string_view data, const BackendOptions& options) {
    if (data.empty()) {
        throw Error(ErrorCode::EmptyInput, "cannot compress empty input");
    }
    switch (options.backend) {
    case Backend::BuiltinLz:
        return compressed_size(data, options.lz);
    case Backend::GzipStream:
        if (options.gzip_level < 1 || options.gzip_level > 9) {
            throw Error(ErrorCode::InvalidConfig, "gzip level must be in 1..9");
        }
        return {gzip_member_size(data, options.gzip_level), Backend::GzipStream};
    }
    throw Error(ErrorCode::InvalidConfig, "unknown backend");
}

} // namespace textchi
