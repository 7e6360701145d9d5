#pragma once

#include <cstdint>
#include <random>

namespace recon {

/// Seeded random stream with platform-independent derived draws. All
/// stochastic code in this project draws through this wrapper so that a
/// fixed seed reproduces byte-identical results everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    /// Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::size_t index(std::size_t n) {
        const std::uint64_t range = n;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return static_cast<std::size_t>(v % range);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace recon
