#pragma once

#include <cmath>
#include <cstdint>

namespace hamest {

// Small counter-keyed generator (splitmix64).  Monte-Carlo code derives one
// independent stream per (seed, trial) pair so that results do not depend on
// evaluation order and reruns are bitwise reproducible across platforms;
// <random> distributions are avoided because their output is
// implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform double in (0, 1]; safe to pass through log().
    double next_open_double() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (no state carried between calls).
    double next_gaussian() {
        const double u1 = next_open_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_;
};

// Stream for one trial: mixing the counter through the increment constant
// decorrelates neighbouring trials, and a warm-up step separates the stream
// from the raw key.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 gen(seed + 0x9e3779b97f4a7c15ULL * (counter + 1));
    gen.next_u64();
    return gen;
}

} // namespace hamest
