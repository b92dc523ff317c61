#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace chebtrot {

// Stateless generator: every draw is a pure function of (seed, stream, counter),
// so results do not depend on which thread asks or in what order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t bits(std::uint64_t counter) const { return mix(key_ ^ mix(counter * 0x9e3779b97f4a7c15ULL + 1)); }

    // Uniform on (0, 1).
    double uniform(std::uint64_t counter) const {
        return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller on counters 2c and 2c+1.
    double normal(std::uint64_t counter) const {
        const double u1 = uniform(2 * counter), u2 = uniform(2 * counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
};

}  // namespace chebtrot
