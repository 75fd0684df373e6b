#pragma once

#include <cmath>
#include <cstdint>

namespace ccral {

// All randomness in the library flows from one 64-bit master seed through
// splitmix64. Child streams are derived with mix_seed(master, purpose, index),
// so a run is replayable from (master seed, purpose constant, index) alone.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

namespace seed_purpose {
inline constexpr std::uint64_t kSplit = 0x53504C4954ull;      // "SPLIT"
inline constexpr std::uint64_t kSynthetic = 0x53594E5448ull;  // "SYNTH"
}  // namespace seed_purpose

constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t purpose,
                                 std::uint64_t index = 0) {
    return splitmix64(master ^ purpose ^ splitmix64(index));
}

// Deterministic generator with a fixed algorithm. std::shuffle,
// std::uniform_int_distribution and std::normal_distribution are
// implementation-defined, so they cannot back the byte-identical
// reproducibility contract; this class can.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    // Uniform in [0, n) by rejection, bias-free.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Box-Muller without the cached spare, so each call consumes exactly two
    // draws regardless of history.
    double normal(double mu = 0.0, double sigma = 1.0) {
        const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mu + sigma * r * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_;
};

// In-place Fisher-Yates with the fixed generator above.
template <typename Vec>
void shuffle(Vec& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        using std::swap;
        swap(v[i - 1], v[j]);
    }
}

}  // namespace ccral
