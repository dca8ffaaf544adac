#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

// Deterministic random streams. Restart k of a multi-restart run draws
// from seed split_seed(master_seed, k); the split is one splitmix64 step
// applied to master_seed + k * 2^64/phi, so restarts are independent of
// execution order and of each other.
//
// Real-valued draws are built from raw mt19937_64 output (the engine is
// specified bit-exactly by the standard; library distributions are not),
// keeping runs reproducible across standard libraries.

namespace pcryst {

inline std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t split_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64(master_seed + index * 0x9E3779B97F4A7C15ULL);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform in (0, 1]
    double uniform_open() { return 1.0 - uniform(); }

    // two independent standard normals (Box-Muller)
    std::pair<double, double> gaussian_pair() {
        const double r = std::sqrt(-2.0 * std::log(uniform_open()));
        const double t = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

    // uniform over the disk of given radius centered at the origin
    std::pair<double, double> disk_point(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double t = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace pcryst
