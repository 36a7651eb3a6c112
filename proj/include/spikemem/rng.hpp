#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace spikemem {

// All randomness in the project flows through this wrapper around
// std::mt19937_64. The raw 64-bit outputs are mapped to doubles and
// bounded ints explicitly (not via std:: distributions) so that streams
// are bit-identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0,1): top 53 bits of the engine output scaled by 2^-53.
    double u01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Multiply-shift bound; bias is < n/2^64.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    // Gaussian via Marsaglia polar transform; the spare value is cached.
    double normal(double mean, double sigma) {
        if (has_spare_) {
            has_spare_ = false;
            return mean + sigma * spare_;
        }
        double a, b, s;
        do {
            a = 2.0 * u01() - 1.0;
            b = 2.0 * u01() - 1.0;
            s = a * a + b * b;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = b * f;
        has_spare_ = true;
        return mean + sigma * a * f;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// SplitMix64 finalizer, used to mix (master seed, stream ids) into
// independent sub-seeds. Per-individual GA streams derive from
// (master_seed, generation, index) so thread count and evaluation order
// cannot change results.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t z = a;
    for (std::uint64_t add : {b, c}) {
        z += 0x9e3779b97f4a7c15ull + add;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
    }
    return z;
}

} // namespace spikemem
