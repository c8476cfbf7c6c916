#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "textchi/chi_analysis.hpp"
#include "textchi/text_model.hpp"

namespace textchi {

struct CorpusEntry {
    std::string source_id;
    std::optional<double> chi; // absent when skipped
    std::size_t symbols = 0;
    std::size_t words = 0;
    Verdict verdict = Verdict::Skipped;
    std::uint64_t seed = 0; // base_seed ^ ordinal
};

struct CorpusReport {
    // chi descending, ties by source_id; skipped entries last.
    std::vector<CorpusEntry> entries;
    double pass_fraction = 0.0;
    std::optional<double> failing_mean_symbols;
    std::size_t skipped = 0;
    double threshold = 1.0;
    std::uint64_t base_seed = 0;
    AnalysisConfig config;
};

/// Analyzes every document with seed base_seed ^ ordinal, where ordinal is
/// the document's position in `docs` unless `ordinals` supplies one per
/// document. Documents with fewer than two words are kept as Skipped.
CorpusReport analyze_corpus(std::span<const Document> docs, std::uint64_t base_seed,
                            const AnalysisConfig& cfg = {},
                            std::span<const std::uint64_t> ordinals = {});

// Sorts entries and recomputes pass_fraction, failing_mean_symbols and
// skipped from them.
void finalize_report(CorpusReport& report);

struct RankPoint {
    std::size_t rank = 0;
    double chi = 0.0;
};

/// 1-based rank against chi, nonincreasing in chi. Skipped entries are left out.
std::vector<RankPoint> rank_distribution(const CorpusReport& report);

struct GroupSummary {
    std::size_t count = 0;
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
};

inline constexpr std::size_t kOverlapMinRealSymbols = 5000;

struct GroupComparison {
    GroupSummary real;
    GroupSummary artificial;
    // Lowest real chi among documents of at least kOverlapMinRealSymbols.
    std::optional<double> real_reference_chi;
    // Artificial entries with chi >= real_reference_chi.
    std::size_t overlap = 0;
};

/// Throws EmptyCorpus when either report has no analyzed entries.
GroupComparison compare_groups(const CorpusReport& real, const CorpusReport& artificial);

} // namespace textchi
