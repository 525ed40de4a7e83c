#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bary {

/// Seeded generator with a fixed, documented output mapping so that
/// instances are reproducible bit for bit: the engine is std::mt19937_64
/// (fully specified by the C++ standard) and doubles are formed from the top
/// 53 bits of each draw. Standard-library distributions are avoided because
/// their algorithms differ between implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
    }
    /// exp(uniform(ln lo, ln hi)).
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    /// Standard normal via Box-Muller (one draw per call, two uniforms).
    double normal() {
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace bary
