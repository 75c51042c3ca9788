#ifndef PAF_RNG_HPP
#define PAF_RNG_HPP

#include <cstdint>
#include <random>

namespace paf {

// Seedable generator used by all stochastic code. The engine is
// std::mt19937_64 (fully specified by the standard) and Gaussian variates
// come from a hand-rolled Box-Muller on 53-bit uniforms, so a (seed, call
// sequence) pair reproduces the same stream everywhere. Monte-Carlo trials
// derive their stream as seed + trial index.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // uniform in (0, 1]  (safe for log())
    double uniform01_open0() {
        return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    long uniform_int(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // standard normal, Box-Muller pair with one value cached
    double gaussian();

    double gaussian(double sigma) { return sigma * gaussian(); }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace paf

#endif
