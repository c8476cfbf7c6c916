#include "textchi/chi_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parallel.hpp"
#include "textchi/error.hpp"

namespace textchi {

std::string_view to_string(Verdict verdict) noexcept {
    switch (verdict) {
    case Verdict::CoherentText: return "coherent_text";
    case Verdict::WordSet: return "word_set";
    case Verdict::Skipped: return "skipped";
    }
    return "unknown";
}

Verdict verdict_from_string(std::string_view name) {
    if (name == "coherent_text") {
        return Verdict::CoherentText;
    }
    if (name == "word_set") {
        return Verdict::WordSet;
    }
    if (name == "skipped") {
        return Verdict::Skipped;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown verdict '" + std::string(name) + "'");
}

namespace {

std::string serialize_permuted(const WordSequence& seq, const std::vector<std::uint32_t>& perm,
                               std::size_t total_bytes) {
    std::string out;
    out.reserve(total_bytes);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i != 0) {
            out.push_back(' ');
        }
        out += seq.words[perm[i]];
    }
    return out;
}

} // namespace

VolumeCurve volume_curve(const WordSequence& seq, std::uint64_t seed, const AnalysisConfig& cfg) {
    if (seq.size() < 2) {
        throw Error(ErrorCode::TooFewWords, "volume curve needs at least two words");
    }
    if (cfg.backend.backend == Backend::BuiltinLz) {
        cfg.backend.lz.validate();
    }
    const auto schedule = IntermixSchedule::for_words(seq.size(), cfg.max_k, cfg.swap_divisor);
    Prng prng(seed);
    const auto perms = intermix_permutations(seq.size(), schedule, prng);

    std::size_t total_bytes = seq.size() - 1;
    for (const auto& w : seq.words) {
        total_bytes += w.size();
    }

    VolumeCurve curve;
    curve.seed = seed;
    curve.backend = cfg.backend.backend;
    curve.words = seq.size();
    curve.swaps = schedule.swap_counts;
    curve.volumes.assign(perms.size(), 0);
    detail::parallel_for(perms.size(), cfg.threads, [&](std::size_t k) {
        const std::string bytes = serialize_permuted(seq, perms[k], total_bytes);
        if (k == 0) {
            curve.symbols = symbol_count(bytes);
        }
        curve.volumes[k] = compress_via_backend(bytes, cfg.backend).size_bytes;
    });
    return curve;
}

VolumeCurve volume_curve(const Document& doc, std::uint64_t seed, const AnalysisConfig& cfg) {
    VolumeCurve curve = volume_curve(tokenize(doc), seed, cfg);
    curve.symbols = symbol_count(doc);
    return curve;
}

ChiReport chi(const VolumeCurve& curve, int plateau_start, double threshold) {
    const auto& v = curve.volumes;
    if (v.empty() || v.front() == 0) {
        throw Error(ErrorCode::DegenerateCurve, "V(0) must be positive");
    }
    const int max_k = static_cast<int>(v.size()) - 1;
    if (plateau_start < 0 || plateau_start > max_k) {
        throw Error(ErrorCode::InvalidArgument, "plateau start " + std::to_string(plateau_start) +
                                                    " outside [0, " + std::to_string(max_k) + "]");
    }
    const auto plateau_begin = v.begin() + plateau_start;
    const double plateau_sum = std::accumulate(plateau_begin, v.end(), 0.0,
                                               [](double acc, std::uint64_t x) {
                                                   return acc + static_cast<double>(x);
                                               });
    const auto [all_min, all_max] = std::minmax_element(v.begin(), v.end());
    const auto [pl_min, pl_max] = std::minmax_element(plateau_begin, v.end());

    ChiReport r;
    r.v0 = v.front();
    r.plateau_k_start = plateau_start;
    r.plateau_mean = plateau_sum / static_cast<double>(v.end() - plateau_begin);
    r.chi = r.plateau_mean / static_cast<double>(r.v0);
    const std::uint64_t full_range = *all_max - *all_min;
    r.fluctuation_ratio =
        full_range == 0 ? 0.0
                        : static_cast<double>(*pl_max - *pl_min) / static_cast<double>(full_range);
    r.symbols = curve.symbols;
    r.threshold = threshold;
    r.verdict = classify(r, threshold);
    return r;
}

Verdict classify(const ChiReport& report, double threshold) {
    return report.chi > threshold ? Verdict::CoherentText : Verdict::WordSet;
}

ChiReport analyze_document(const Document& doc, std::uint64_t seed, const AnalysisConfig& cfg) {
    return chi(volume_curve(doc, seed, cfg), cfg.plateau_start, cfg.threshold);
}

std::vector<LengthPoint> chi_vs_length(const Document& doc,
                                       std::span<const std::size_t> fragment_lengths,
                                       std::uint64_t seed, const AnalysisConfig& cfg) {
    const std::size_t doc_symbols = symbol_count(doc);
    std::size_t previous = 0;
    for (const std::size_t len : fragment_lengths) {
        if (len == 0 || len <= previous) {
            throw Error(ErrorCode::InvalidArgument,
                        "fragment lengths must be positive and strictly increasing");
        }
        if (len > doc_symbols) {
            throw Error(ErrorCode::FragmentTooLong,
                        "fragment of " + std::to_string(len) + " symbols exceeds document of " +
                            std::to_string(doc_symbols));
        }
        previous = len;
    }

    std::vector<LengthPoint> series;
    series.reserve(fragment_lengths.size());
    for (const std::size_t len : fragment_lengths) {
        const std::string_view prefix = truncate_to_word_boundary(doc.content, len);
        WordSequence seq;
        try {
            seq = tokenize(prefix);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::EmptyDocument) {
                throw;
            }
        }
        if (seq.size() < 2) {
            throw Error(ErrorCode::TooFewWords,
                        "fragment of " + std::to_string(len) + " symbols holds fewer than two words");
        }
        VolumeCurve curve = volume_curve(seq, seed, cfg);
        curve.symbols = symbol_count(prefix);
        const ChiReport report = chi(curve, cfg.plateau_start, cfg.threshold);
        series.push_back({len, curve.symbols, seq.size(), report.chi});
    }
    return series;
}

} // namespace textchi
