#include "textchi/zipf_synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "textchi/error.hpp"

namespace textchi {

std::size_t ZipfVocabulary::sample(double u) const noexcept {
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
        return cumulative.size() - 1; // u rounding past the last partial sum
    }
    return static_cast<std::size_t>(it - cumulative.begin());
}

ZipfVocabulary build_vocabulary(std::size_t size, Prng& prng, double exponent) {
    if (size == 0) {
        throw Error(ErrorCode::InvalidArgument, "vocabulary size must be positive");
    }
    if (!(exponent > 0.0) || !std::isfinite(exponent)) {
        throw Error(ErrorCode::InvalidArgument, "Zipf exponent must be positive");
    }
    // 26 + 26^2 + ... + 26^12 distinct strings exist; anything near that
    // would take forever to fill by rejection.
    if (size > 100'000'000) {
        throw Error(ErrorCode::InvalidArgument, "vocabulary size impractically large");
    }

    ZipfVocabulary vocab;
    vocab.exponent = exponent;
    vocab.words.reserve(size);
    std::unordered_set<std::string> seen;
    seen.reserve(size * 2);
    while (vocab.words.size() < size) {
        const std::size_t len = prng.next_index(kMaxPseudowordLength);
        std::string word(len, 'a');
        for (auto& c : word) {
            c = static_cast<char>('a' + prng.next_index(26) - 1);
        }
        if (seen.insert(word).second) {
            vocab.words.push_back(std::move(word));
        }
    }

    vocab.weights.resize(size);
    double harmonic = 0.0;
    for (std::size_t r = 1; r <= size; ++r) {
        vocab.weights[r - 1] = std::pow(static_cast<double>(r), -exponent);
        harmonic += vocab.weights[r - 1];
    }
    vocab.cumulative.resize(size);
    double running = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        vocab.weights[i] /= harmonic;
        running += vocab.weights[i];
        vocab.cumulative[i] = running;
    }
    vocab.cumulative.back() = 1.0;
    return vocab;
}

Document generate_text(const ZipfVocabulary& vocab, std::size_t target_symbols, Prng& prng,
                       std::string source_id) {
    if (target_symbols == 0) {
        throw Error(ErrorCode::InvalidArgument, "target length must be positive");
    }
    if (vocab.size() == 0) {
        throw Error(ErrorCode::InvalidArgument, "empty vocabulary");
    }
    std::string text;
    text.reserve(target_symbols + kMaxPseudowordLength + 1);
    // Pseudowords are ASCII, so bytes and symbols coincide.
    while (text.size() < target_symbols) {
        if (!text.empty()) {
            text.push_back(' ');
        }
        text += vocab.words[vocab.sample(prng.next_unit())];
    }
    return {std::move(text), std::move(source_id)};
}

Document generate_zipf_document(const ZipfTextParams& params, std::uint64_t seed,
                                std::string source_id) {
    Prng prng(seed);
    const ZipfVocabulary vocab = build_vocabulary(params.vocab_size, prng, params.exponent);
    return generate_text(vocab, params.symbols, prng, std::move(source_id));
}

std::vector<RankFrequency> empirical_rank_frequency(const Document& doc) {
    const WordSequence seq = tokenize(doc);
    std::map<std::string, std::uint64_t> counts;
    for (const auto& w : seq.words) {
        ++counts[w];
    }
    std::vector<RankFrequency> ranked;
    ranked.reserve(counts.size());
    for (auto& [word, n] : counts) {
        ranked.push_back({0, word, n});
    }
    // std::map iteration is already lexicographic; stable sort keeps it for ties.
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const RankFrequency& a, const RankFrequency& b) {
                         return a.frequency > b.frequency;
                     });
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        ranked[i].rank = i + 1;
    }
    return ranked;
}

} // namespace textchi
