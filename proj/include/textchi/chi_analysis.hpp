#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "textchi/compress.hpp"
#include "textchi/permute.hpp"
#include "textchi/text_model.hpp"

namespace textchi {

enum class Verdict { CoherentText, WordSet, Skipped };

std::string_view to_string(Verdict verdict) noexcept;
Verdict verdict_from_string(std::string_view name);

struct AnalysisConfig {
    BackendOptions backend;
    int max_k = 20;
    int swap_divisor = 10;
    int plateau_start = 6;
    double threshold = 1.0;
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

// Compressed volumes V(0..K) of the successive intermixing states.
struct VolumeCurve {
    std::vector<std::uint64_t> volumes;
    std::vector<std::uint64_t> swaps;
    std::uint64_t seed = 0;
    Backend backend = Backend::BuiltinLz;
    std::size_t words = 0;
    std::size_t symbols = 0;
};

struct ChiReport {
    double chi = 0.0;
    std::uint64_t v0 = 0;
    double plateau_mean = 0.0;
    int plateau_k_start = 6;
    double fluctuation_ratio = 0.0;
    double threshold = 1.0;
    Verdict verdict = Verdict::WordSet;
    std::size_t symbols = 0;
};

VolumeCurve volume_curve(const Document& doc, std::uint64_t seed,
                         const AnalysisConfig& cfg = {});
VolumeCurve volume_curve(const WordSequence& seq, std::uint64_t seed,
                         const AnalysisConfig& cfg = {});

/// Plateau mean over k = plateau_start..K divided by V(0), plus the plateau
/// spread relative to the full curve range (0 for a constant curve).
ChiReport chi(const VolumeCurve& curve, int plateau_start = 6, double threshold = 1.0);

/// CoherentText iff chi > threshold.
Verdict classify(const ChiReport& report, double threshold = 1.0);

ChiReport analyze_document(const Document& doc, std::uint64_t seed,
                           const AnalysisConfig& cfg = {});

struct LengthPoint {
    std::size_t length = 0;  // requested symbols
    std::size_t symbols = 0; // after rounding down to a word boundary
    std::size_t words = 0;
    double chi = 0.0;
};

/// chi of successive document prefixes. Lengths must be positive and
/// strictly increasing; a length beyond the document raises FragmentTooLong,
/// a prefix with fewer than two words raises TooFewWords.
std::vector<LengthPoint> chi_vs_length(const Document& doc,
                                       std::span<const std::size_t> fragment_lengths,
                                       std::uint64_t seed, const AnalysisConfig& cfg = {});

} // namespace textchi
