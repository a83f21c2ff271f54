#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bw {

// splitmix64 (Vigna); used only for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed of the per-trial substream. Every trial of every sweep point draws
// from its own stream, so campaign results do not depend on execution order
// or on the number of worker threads.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t point,
                                    std::uint64_t trial) {
    std::uint64_t h = splitmix64(seed ^ 0x6A09E667F3BCC909ULL);
    h = splitmix64(h ^ (point + 1) * 0x9E3779B97F4A7C15ULL);
    h = splitmix64(h ^ (trial + 1) * 0xC2B2AE3D27D4EB4FULL);
    return h;
}

// mt19937_64 core with an explicit Box-Muller transform on top. The standard
// pins mt19937_64 bit-for-bit; std::normal_distribution is not pinned, so the
// Gaussian path is spelled out here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // uniform in (0, 1]
    double uniform_pos() {
        return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double m = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = m * std::sin(a);
        have_spare_ = true;
        return m * std::cos(a);
    }

    // uniform integer in [lo, hi]; modulo is deterministic everywhere and the
    // bias is negligible for the tiny ranges used here.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(eng_() % span);
    }

    bool coin() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace bw
