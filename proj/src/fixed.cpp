#include "paf/fixed.hpp"

#include <cmath>
#include <stdexcept>

namespace paf {

std::int16_t sat16(std::int64_t v, SatCounter* sat) {
    if (v > 32767) {
        if (sat) ++sat->events;
        return 32767;
    }
    if (v < -32768) {
        if (sat) ++sat->events;
        return -32768;
    }
    return static_cast<std::int16_t>(v);
}

QNum quantize(double x, QFormat fmt, SatCounter* sat) {
    if (!std::isfinite(x)) throw std::invalid_argument("quantize: non-finite value");
    const double scaled = std::ldexp(x, fmt.frac_bits);
    // default FP rounding is to-nearest-even
    const double r = std::nearbyint(scaled);
    std::int64_t raw;
    if (r >= 32768.0) raw = 32768;        // forces saturation below
    else if (r <= -32769.0) raw = -32769;
    else raw = static_cast<std::int64_t>(r);
    return QNum{sat16(raw, sat), fmt};
}

std::int64_t rne_shift(std::int64_t v, int r) {
    if (r <= 0) return v << -r;
    const std::int64_t q = v >> r;  // floor
    const std::int64_t rem = v - (q << r);
    const std::int64_t half = std::int64_t{1} << (r - 1);
    if (rem > half || (rem == half && (q & 1))) return q + 1;
    return q;
}

QNum sat_add(QNum a, QNum b, SatCounter* sat) {
    if (a.fmt.frac_bits != b.fmt.frac_bits) throw std::invalid_argument("sat_add: format mismatch");
    return QNum{sat16(static_cast<std::int64_t>(a.raw) + b.raw, sat), a.fmt};
}

QNum sat_sub(QNum a, QNum b, SatCounter* sat) {
    if (a.fmt.frac_bits != b.fmt.frac_bits) throw std::invalid_argument("sat_sub: format mismatch");
    return QNum{sat16(static_cast<std::int64_t>(a.raw) - b.raw, sat), a.fmt};
}

}  // namespace paf
