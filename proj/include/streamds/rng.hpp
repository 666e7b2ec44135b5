#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace streamds {

// Self-contained 64-bit generator (splitmix64). Simulations must be
// bit-reproducible from a seed alone, so we do not rely on the standard
// library's unspecified distribution algorithms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi], inclusive. Rejection sampling keeps it unbiased.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<int>(v % span);
    }

    // True with probability p.
    bool bernoulli(double p) { return next_double() < p; }

    // Uniform in [lo, hi).
    double uniform_real(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Knuth's product-of-uniforms method; exact and portable for small rates.
    int poisson(double lambda) {
        const double threshold = std::exp(-lambda);
        int k = 0;
        double prod = next_double();
        while (prod > threshold) {
            ++k;
            prod *= next_double();
        }
        return k;
    }

    // Derive an independent seed from a base seed and a list of tags.
    static std::uint64_t mix(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
        Rng r(base);
        std::uint64_t h = r.next_u64();
        for (std::uint64_t t : tags) {
            Rng s(h ^ (t + 0x9e3779b97f4a7c15ULL));
            h = s.next_u64();
        }
        return h;
    }

private:
    std::uint64_t state_;
};

}  // namespace streamds
