#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace patchclust {

// Deterministic, platform-independent random numbers. All generators in this
// project are seeded through these types so that identical (parameters, seed)
// pairs reproduce identical streams bit for bit, independent of the standard
// library implementation.

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// One-shot avalanche of a 64-bit value; used to derive per-cell noise and
// per-component sub-seeds without carrying generator state around.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1); never returns an exact endpoint, so logs are finite
    // and exponential gaps are strictly positive.
    double uniform01_open() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Exponential with rate lambda (mean 1/lambda), strictly positive.
    double exponential(double lambda) { return -std::log(uniform01_open()) / lambda; }

    double normal(double mu, double sigma) {
        if (have_spare_) {
            have_spare_ = false;
            return mu + sigma * spare_;
        }
        const double u1 = uniform01_open();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return mu + sigma * radius * std::cos(angle);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Independent sub-stream seed for component `index` of a composite generator.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace patchclust
