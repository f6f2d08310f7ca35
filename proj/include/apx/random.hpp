#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace apx {

/// Seeded generator with platform-independent output.
///
/// std::mt19937 is bit-exact by the standard; the distributions are not,
/// so uniform and normal draws are derived here by hand.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(static_cast<std::mt19937::result_type>(seed)) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() {
        const uint64_t hi = engine_() >> 5;   // 27 bits
        const uint64_t lo = engine_() >> 6;   // 26 bits
        return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(uniform01() * (static_cast<double>(hi) - lo + 1.0));
    }

private:
    std::mt19937 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace apx
