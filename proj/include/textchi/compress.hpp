#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace textchi {

// Parameters of the built-in greedy LZ77 meter. Defaults follow DEFLATE's
// window and match bounds; costs are per token, in bits.
struct CompressorConfig {
    std::size_t window_size = 32768;
    std::size_t min_match = 3;
    std::size_t max_match = 258;
    std::uint32_t literal_cost = 9;
    std::uint32_t match_cost = 25; // 1 flag + 15 offset + 9 length

    // Throws InvalidConfig when the bounds or costs are inconsistent.
    void validate() const;

    bool operator==(const CompressorConfig&) const = default;
};

struct Literal {
    std::uint8_t byte;
    bool operator==(const Literal&) const = default;
};

struct Match {
    std::size_t offset; // distance back from the current position, >= 1
    std::size_t length;
    bool operator==(const Match&) const = default;
};

using LzToken = std::variant<Literal, Match>;

enum class Backend { BuiltinLz, GzipStream };

std::string_view to_string(Backend backend) noexcept;
Backend backend_from_string(std::string_view name);

struct CompressedVolume {
    std::uint64_t size_bytes = 0;
    Backend backend = Backend::BuiltinLz;
};

struct BackendOptions {
    Backend backend = Backend::BuiltinLz;
    CompressorConfig lz;
    int gzip_level = 6;
};

/// Greedy parse: at every position take the longest match of at least
/// min_match bytes inside the window, preferring the nearest offset among
/// equals; otherwise a literal. Throws EmptyInput on empty data.
std::vector<LzToken> lz_parse(std::span<const std::uint8_t> data,
                              const CompressorConfig& cfg = {});
std::vector<LzToken> lz_parse(std::string_view data, const CompressorConfig& cfg = {});

/// Inverse of lz_parse. Throws InvalidArgument on a match reaching before
/// the start of the output.
std::vector<std::uint8_t> lz_decode(std::span<const LzToken> tokens);

struct TokenCounts {
    std::uint64_t literals = 0;
    std::uint64_t matches = 0;
};

// Token census of the same parse lz_parse would produce, without
// materialising the token list.
TokenCounts lz_token_counts(std::span<const std::uint8_t> data, const CompressorConfig& cfg = {});

/// ceil((literal_cost * literals + match_cost * matches) / 8).
CompressedVolume compressed_size(std::span<const std::uint8_t> data,
                                 const CompressorConfig& cfg = {});
CompressedVolume compressed_size(std::string_view data, const CompressorConfig& cfg = {});

bool gzip_available() noexcept;

// Identification of the gzip encoder in use, e.g. "zlib 1.2.11". Empty when
// the gzip backend is not compiled in.
std::string gzip_encoder_id();

/// Size of the compressed volume under the chosen backend. The gzip backend
/// measures one complete RFC 1952 member; it throws BackendUnavailable when
/// no encoder is present and is never replaced by the builtin meter.
CompressedVolume compress_via_backend(std::string_view data, const BackendOptions& options);

} // namespace textchi
