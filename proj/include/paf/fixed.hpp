#ifndef PAF_FIXED_HPP
#define PAF_FIXED_HPP

#include <cstdint>

namespace paf {

// 16-bit signed fixed point, value = raw * 2^-frac_bits. All arithmetic
// saturates at the raw bounds (never wraps); saturation events are counted
// so experiments can assert the chosen formats never clip.
struct QFormat {
    int frac_bits;
    constexpr double lsb() const { return 1.0 / static_cast<double>(1 << frac_bits); }
};

// Datapath formats: signals and weights Q1.14, error (and products feeding
// the E block) Q3.12, log-domain magnitudes Q5.10.
inline constexpr QFormat kQ1_14{14};
inline constexpr QFormat kQ3_12{12};
inline constexpr QFormat kQ5_10{10};
// Gain-sum (adder tree output) formats, sized so paper-scale sums fit:
// |w| sums for the proportionate path, mu-law sums for the log path.
inline constexpr QFormat kQ5_10w{10};
inline constexpr QFormat kQ10_5{5};

struct SatCounter {
    std::uint64_t events = 0;
};

struct QNum {
    std::int16_t raw = 0;
    QFormat fmt{14};

    double value() const { return static_cast<double>(raw) * fmt.lsb(); }
};

// Round-to-nearest-even, then saturate.
QNum quantize(double x, QFormat fmt, SatCounter* sat = nullptr);

// Saturating int16 cast from a wide value.
std::int16_t sat16(std::int64_t v, SatCounter* sat = nullptr);

// Arithmetic shift right by `r` with round-half-to-even (r <= 0 shifts
// left). Requantization of adder-tree outputs.
std::int64_t rne_shift(std::int64_t v, int r);

// Saturating add in a shared format.
QNum sat_add(QNum a, QNum b, SatCounter* sat = nullptr);
QNum sat_sub(QNum a, QNum b, SatCounter* sat = nullptr);

}  // namespace paf

#endif
