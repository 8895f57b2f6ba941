#ifndef PFA_RNG_HPP
#define PFA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace pfa {

// splitmix64; used to derive decorrelated sub-seeds from (seed, tag) pairs.
inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t seed, uint64_t tag) {
    return mix64(seed ^ mix64(tag));
}

// The distributions below are built from raw mt19937_64 output so every
// platform produces the same sequence (std::*_distribution is
// implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [0, n).
    uint64_t below(uint64_t n) {
        // modulo bias is irrelevant at these ranges
        return n ? gen_() % n : 0;
    }

    /// Standard normal via Box-Muller (deterministic across platforms).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace pfa

#endif
