#pragma once

#include <cmath>
#include <cstdint>

namespace speechscore {

// splitmix64. Chosen over std::mt19937 + <random> distributions because
// the distribution outputs there are implementation-defined; fixtures
// must be byte-identical across platforms.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool bernoulli(double p) { return uniform() < p; }

    double gauss(double mean, double std) {
        // Box-Muller, no cached spare: one draw consumes two uniforms
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + std * r * std::cos(2.0 * 3.141592653589793 * u2);
    }

    double truncated_gauss(double mean, double std, double lo, double hi) {
        for (int i = 0; i < 100; ++i) {
            double v = gauss(mean, std);
            if (v >= lo && v <= hi) return v;
        }
        double v = gauss(mean, std);
        return v < lo ? lo : (v > hi ? hi : v);
    }

private:
    std::uint64_t state_;
};

}  // namespace speechscore
