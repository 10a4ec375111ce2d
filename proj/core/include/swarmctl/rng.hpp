#pragma once

#include <cstdint>
#include <random>

namespace swarmctl {

/// splitmix64 finaliser; bijective on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent stream seed for `index` under `master`:
/// splitmix64(master ^ splitmix64(index)).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Platform-independent generator: std::mt19937_64 (whose output sequence is
/// fixed by the standard) seeded with splitmix64(seed). Bounded integers and
/// reals are drawn here rather than through std distributions, whose algorithms
/// vary between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace swarmctl
