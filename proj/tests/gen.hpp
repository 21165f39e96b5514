#pragma once

// Seeded generators for property tests.

#include <cmath>
#include <cstdint>
#include <utility>

namespace gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        // xorshift64*
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

    /// Distinct positive pair spanning twelve decades, occasionally nearly equal.
    std::pair<double, double> pair() {
        const double a = log_uniform(1e-6, 1e6);
        double b = 0.0;
        switch (next() % 4) {
            case 0: b = a * (1.0 + log_uniform(1e-9, 1e-3)); break;
            case 1: b = a * log_uniform(1.001, 1e4); break;
            default: b = log_uniform(1e-6, 1e6); break;
        }
        if (b == a) b = a * 1.5;
        return next() % 2 ? std::make_pair(a, b) : std::make_pair(b, a);
    }

private:
    std::uint64_t state_;
};

}  // namespace gen
