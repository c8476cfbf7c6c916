#include "textchi/permute.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "textchi/error.hpp"

namespace textchi {

std::size_t Prng::next_index(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "index range must be non-empty");
    }
    const auto range = static_cast<std::uint64_t>(n);
    // 2^64 mod range; draws at or above 2^64 - rem would bias low indices.
    const std::uint64_t rem = (0 - range) % range;
    std::uint64_t x = next();
    if (rem != 0) {
        while (x >= 0 - rem) {
            x = next();
        }
    }
    return static_cast<std::size_t>(x % range) + 1;
}

IntermixSchedule IntermixSchedule::for_words(std::size_t word_count, int max_k, int divisor) {
    if (max_k < 0) {
        throw Error(ErrorCode::InvalidConfig, "max_k must be non-negative");
    }
    if (divisor <= 0) {
        throw Error(ErrorCode::InvalidConfig, "swap divisor must be positive");
    }
    IntermixSchedule s;
    s.max_k = max_k;
    s.divisor = divisor;
    s.swap_counts.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        s.swap_counts.push_back(static_cast<std::uint64_t>(k) * word_count /
                                static_cast<std::uint64_t>(divisor));
    }
    return s;
}

WordSequence atomic_swap(WordSequence seq, std::size_t n, std::size_t m) {
    const std::size_t len = seq.size();
    if (n < 1 || n > len || m < 1 || m > len) {
        throw Error(ErrorCode::IndexOutOfRange, "swap (" + std::to_string(n) + ", " +
                                                    std::to_string(m) + ") outside [1, " +
                                                    std::to_string(len) + "]");
    }
    std::swap(seq.words[n - 1], seq.words[m - 1]);
    return seq;
}

namespace {

void check_schedule(std::size_t word_count, const IntermixSchedule& schedule) {
    if (schedule.swap_counts.empty() || schedule.swap_counts.front() != 0) {
        throw Error(ErrorCode::InvalidConfig, "schedule must start at zero swaps");
    }
    for (std::size_t k = 1; k < schedule.swap_counts.size(); ++k) {
        if (schedule.swap_counts[k] < schedule.swap_counts[k - 1]) {
            throw Error(ErrorCode::InvalidConfig, "schedule swap counts must be nondecreasing");
        }
    }
    if (word_count < 2 && schedule.swap_counts.back() > 0) {
        throw Error(ErrorCode::TooFewWords, "intermixing needs at least two words");
    }
}

// Applies `count` swaps drawn from the stream to `items`.
template <typename T>
void apply_swaps(std::vector<T>& items, std::uint64_t count, Prng& prng) {
    const std::size_t n = items.size();
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::size_t a = prng.next_index(n);
        const std::size_t b = prng.next_index(n);
        std::swap(items[a - 1], items[b - 1]);
    }
}

} // namespace

std::vector<WordSequence> intermix_states(const WordSequence& seq,
                                          const IntermixSchedule& schedule, Prng& prng) {
    check_schedule(seq.size(), schedule);
    std::vector<WordSequence> states;
    states.reserve(schedule.states());
    states.push_back(seq);
    for (std::size_t k = 1; k < schedule.states(); ++k) {
        WordSequence next = states.back();
        apply_swaps(next.words, schedule.swap_counts[k] - schedule.swap_counts[k - 1], prng);
        states.push_back(std::move(next));
    }
    return states;
}

std::vector<std::vector<std::uint32_t>> intermix_permutations(std::size_t word_count,
                                                              const IntermixSchedule& schedule,
                                                              Prng& prng) {
    check_schedule(word_count, schedule);
    if (word_count > UINT32_MAX) {
        throw Error(ErrorCode::InvalidArgument, "document too long");
    }
    std::vector<std::vector<std::uint32_t>> perms;
    perms.reserve(schedule.states());
    std::vector<std::uint32_t> current(word_count);
    std::iota(current.begin(), current.end(), 0u);
    perms.push_back(current);
    for (std::size_t k = 1; k < schedule.states(); ++k) {
        apply_swaps(current, schedule.swap_counts[k] - schedule.swap_counts[k - 1], prng);
        perms.push_back(current);
    }
    return perms;
}

} // namespace textchi
