#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "textchi/permute.hpp"
#include "textchi/text_model.hpp"

namespace textchi {

// Pseudowords of 1..12 lowercase letters with Zipf weights r^-s / H.
// Rank r is the 1-based position in `words`.
struct ZipfVocabulary {
    std::vector<std::string> words;
    std::vector<double> weights;
    std::vector<double> cumulative; // running sum of weights, last == 1
    double exponent = 1.0;

    std::size_t size() const noexcept { return words.size(); }

    // Rank (0-based) whose cumulative interval contains u in [0, 1).
    std::size_t sample(double u) const noexcept;
};

inline constexpr std::size_t kMinPseudowordLength = 1;
inline constexpr std::size_t kMaxPseudowordLength = 12;

ZipfVocabulary build_vocabulary(std::size_t size, Prng& prng, double exponent = 1.0);

/// i.i.d. words by weight, joined with single spaces, stopping at the first
/// word that brings the length to target_symbols or more, so the result is
/// at most target_symbols + 12 long. Requires target_symbols >= 1.
Document generate_text(const ZipfVocabulary& vocab, std::size_t target_symbols, Prng& prng,
                       std::string source_id = "zipf");

struct ZipfTextParams {
    std::size_t vocab_size = 1000;
    double exponent = 1.0;
    std::size_t symbols = 10000;
};

// Vocabulary and text drawn from a single stream seeded with `seed`.
Document generate_zipf_document(const ZipfTextParams& params, std::uint64_t seed,
                                std::string source_id);

struct RankFrequency {
    std::size_t rank = 0;
    std::string word;
    std::uint64_t frequency = 0;
};

/// Token counts, descending, ties broken lexicographically.
std::vector<RankFrequency> empirical_rank_frequency(const Document& doc);

} // namespace textchi
