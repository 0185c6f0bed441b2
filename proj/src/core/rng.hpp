#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sdd {

// Deterministic random numbers for simulation. The engine is std::mt19937_64,
// whose output sequence is fixed by the standard; uniforms and normals are
// built here by hand because std::uniform_real_distribution and
// std::normal_distribution are allowed to differ between standard libraries.
//
// Draw orders are part of the reproducibility contract:
//   uniform()   consumes one engine output,
//   normal()    consumes one engine output per polar-method candidate pair
//               (two uniforms) and caches the second deviate,
//   derive_seed gives independent streams for separate purposes.

// splitmix64 step, used to decorrelate user seeds and stream tags.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed for the sub-stream `stream` of a user-visible seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (0x6a09e667f3bcc909ULL + stream);
    return splitmix64(s);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Standard normal via the Marsaglia polar method (sqrt/log only, no
    // trigonometry, so results are stable across libm implementations in
    // practice). Rejection keeps determinism: consumption depends only on
    // the engine stream.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection to avoid modulo bias.
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace sdd
