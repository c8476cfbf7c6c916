#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "textchi/text_model.hpp"

namespace textchi {

/// 64-bit xorshift* generator. Same seed gives the same stream everywhere.
/// The state is never zero: a zero seed is remapped to kZeroSeedReplacement.
class Prng {
public:
    static constexpr std::uint64_t kZeroSeedReplacement = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kMultiplier = 2685821657736338717ULL;

    explicit Prng(std::uint64_t seed) noexcept
        : state_(seed == 0 ? kZeroSeedReplacement : seed) {}

    std::uint64_t state() const noexcept { return state_; }

    std::uint64_t next() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * kMultiplier;
    }

    /// Uniform integer in [1, n] by rejection over the largest multiple of n
    /// representable in 64 bits. Requires n >= 1.
    std::size_t next_index(std::size_t n);

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool operator==(const Prng&) const = default;

private:
    std::uint64_t state_;
};

/// Swap counts floor(k * N / divisor) for k = 0..max_k.
struct IntermixSchedule {
    int max_k = 20;
    int divisor = 10;
    std::vector<std::uint64_t> swap_counts;

    static IntermixSchedule for_words(std::size_t word_count, int max_k = 20,
                                      int divisor = 10);

    std::size_t states() const noexcept { return swap_counts.size(); }
};

/// Exchanges words at 1-based positions n and m.
WordSequence atomic_swap(WordSequence seq, std::size_t n, std::size_t m);

/// Runs the schedule along one prng stream. Element k has absorbed exactly
/// swap_counts[k] swaps; each swap draws n, then m. The prng is advanced.
std::vector<WordSequence> intermix_states(const WordSequence& seq,
                                          const IntermixSchedule& schedule,
                                          Prng& prng);

/// Same trajectory as intermix_states, expressed as index permutations into
/// the original word list (perm[i] = original position of the word now at i).
/// Used where materialising K+1 copies of a long text would be wasteful.
std::vector<std::vector<std::uint32_t>> intermix_permutations(
    std::size_t word_count, const IntermixSchedule& schedule, Prng& prng);

} // namespace textchi
