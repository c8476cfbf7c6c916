#include "textchi/corpus.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "textchi/error.hpp"

namespace textchi {

CorpusReport analyze_corpus(std::span<const Document> docs, std::uint64_t base_seed,
                            const AnalysisConfig& cfg, std::span<const std::uint64_t> ordinals) {
    if (docs.empty()) {
        throw Error(ErrorCode::EmptyCorpus, "no documents to analyze");
    }
    if (!ordinals.empty() && ordinals.size() != docs.size()) {
        throw Error(ErrorCode::InvalidArgument, "one ordinal per document required");
    }

    // Parallelism lives at the document level here.
    AnalysisConfig per_doc = cfg;
    per_doc.threads = 1;

    CorpusReport report;
    report.threshold = cfg.threshold;
    report.base_seed = base_seed;
    report.config = cfg;
    report.entries.resize(docs.size());
    detail::parallel_for(docs.size(), cfg.threads, [&](std::size_t i) {
        const Document& doc = docs[i];
        CorpusEntry& entry = report.entries[i];
        entry.source_id = doc.source_id;
        entry.symbols = symbol_count(doc);
        entry.seed = base_seed ^ (ordinals.empty() ? static_cast<std::uint64_t>(i) : ordinals[i]);

        WordSequence seq;
        try {
            seq = tokenize(doc);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::EmptyDocument) {
                throw;
            }
        }
        entry.words = seq.size();
        if (seq.size() < 2) {
            entry.verdict = Verdict::Skipped;
            return;
        }
        VolumeCurve curve = volume_curve(seq, entry.seed, per_doc);
        curve.symbols = entry.symbols;
        const ChiReport r = chi(curve, cfg.plateau_start, cfg.threshold);
        entry.chi = r.chi;
        entry.verdict = r.verdict;
    });
    finalize_report(report);
    return report;
}

void finalize_report(CorpusReport& report) {
    std::sort(report.entries.begin(), report.entries.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) {
                  if (a.chi.has_value() != b.chi.has_value()) {
                      return a.chi.has_value();
                  }
                  if (a.chi && *a.chi != *b.chi) {
                      return *a.chi > *b.chi;
                  }
                  return a.source_id < b.source_id;
              });
    std::size_t passing = 0;
    std::size_t failing = 0;
    double failing_symbols = 0.0;
    report.skipped = 0;
    for (const auto& e : report.entries) {
        if (!e.chi) {
            ++report.skipped;
        } else if (*e.chi > report.threshold) {
            ++passing;
        } else {
            ++failing;
            failing_symbols += static_cast<double>(e.symbols);
        }
    }
    report.pass_fraction = report.entries.empty()
                               ? 0.0
                               : static_cast<double>(passing) /
                                     static_cast<double>(report.entries.size());
    report.failing_mean_symbols.reset();
    if (failing > 0) {
        report.failing_mean_symbols = failing_symbols / static_cast<double>(failing);
    }
}

std::vector<RankPoint> rank_distribution(const CorpusReport& report) {
    std::vector<double> chis;
    for (const auto& e : report.entries) {
        if (e.chi) {
            chis.push_back(*e.chi);
        }
    }
    std::sort(chis.begin(), chis.end(), std::greater<>());
    std::vector<RankPoint> out;
    out.reserve(chis.size());
    for (std::size_t i = 0; i < chis.size(); ++i) {
        out.push_back({i + 1, chis[i]});
    }
    return out;
}

namespace {

GroupSummary summarize(const CorpusReport& report, const char* label) {
    GroupSummary s;
    s.min = std::numeric_limits<double>::infinity();
    s.max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& e : report.entries) {
        if (!e.chi) {
            continue;
        }
        ++s.count;
        sum += *e.chi;
        s.min = std::min(s.min, *e.chi);
        s.max = std::max(s.max, *e.chi);
    }
    if (s.count == 0) {
        throw Error(ErrorCode::EmptyCorpus, std::string(label) + " group has no analyzed documents");
    }
    s.mean = sum / static_cast<double>(s.count);
    return s;
}

} // namespace

GroupComparison compare_groups(const CorpusReport& real, const CorpusReport& artificial) {
    GroupComparison c;
    c.real = summarize(real, "real");
    c.artificial = summarize(artificial, "artificial");
    for (const auto& e : real.entries) {
        if (e.chi && e.symbols >= kOverlapMinRealSymbols) {
            c.real_reference_chi = std::min(c.real_reference_chi.value_or(*e.chi), *e.chi);
        }
    }
    if (c.real_reference_chi) {
        for (const auto& e : artificial.entries) {
            if (e.chi && *e.chi >= *c.real_reference_chi) {
                ++c.overlap;
            }
        }
    }
    return c;
}

} // namespace textchi
