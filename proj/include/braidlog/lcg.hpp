#ifndef BRAIDLOG_LCG_HPP
#define BRAIDLOG_LCG_HPP

#include <cstdint>

namespace braidlog {

// Deterministic 32-bit linear congruential generator used by every seeded
// suite: state <- 1664525*state + 1013904223 (mod 2^32). Identical streams on
// every platform, so randomized checks are bit-reproducible.
class Lcg {
public:
    explicit Lcg(std::uint32_t seed = 1) : state_(seed) {}

    std::uint32_t next() {
        state_ = 1664525u * state_ + 1013904223u;
        return state_;
    }

    // uniform in [0, bound)
    std::uint32_t next_below(std::uint32_t bound) { return bound ? next() % bound : 0; }

    // uniform in [lo, hi] inclusive
    int next_range(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint32_t>(hi - lo + 1)));
    }

private:
    std::uint32_t state_;
};

}  // namespace braidlog

#endif
