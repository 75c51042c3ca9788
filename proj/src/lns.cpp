#include "paf/lns.hpp"

#include <bit>
#include <stdexcept>

namespace paf {

LnsValue mitchell_log2_raw(std::uint64_t mag, int frac_bits, bool negative) {
    LnsValue v;
    if (mag == 0) return v;  // zero-flagged
    v.zero = false;
    v.negative = negative;
    const int p = std::bit_width(mag) - 1;  // leading-one position
    const int k = p - frac_bits;
    std::uint64_t frac;
    if (p >= kLnsFracBits)
        frac = (mag >> (p - kLnsFracBits)) & 0x3FF;  // truncate low bits
    else
        frac = (mag << (kLnsFracBits - p)) & 0x3FF;  // left-align short fractions
    std::int64_t raw = (static_cast<std::int64_t>(k) << kLnsFracBits) + static_cast<std::int64_t>(frac);
    if (raw > 32767) raw = 32767;
    if (raw < -32768) raw = -32768;
    v.logmag = static_cast<std::int16_t>(raw);
    return v;
}

LnsValue log2_mitchell(QNum q) {
    const std::int32_t r = q.raw;
    const std::uint64_t mag = static_cast<std::uint64_t>(r < 0 ? -r : r);
    return mitchell_log2_raw(mag, q.fmt.frac_bits, r < 0);
}

QNum antilog2_from_wide(std::int64_t logmag_raw, bool negative, QFormat fmt, SatCounter* sat) {
    const std::int64_t k = logmag_raw >> kLnsFracBits;
    const std::int64_t x = logmag_raw & 0x3FF;
    const std::int64_t m = (std::int64_t{1} << kLnsFracBits) + x;  // 1.x, 11 bits
    const int shift = static_cast<int>(k) + fmt.frac_bits - kLnsFracBits;
    std::int64_t mag;
    if (shift >= 0)
        mag = shift >= 48 ? std::int64_t{1} << 62 : (m << shift);
    else
        mag = -shift >= 63 ? 0 : (m >> -shift);  // truncating barrel shift
    if (mag > 32767) {
        if (sat) ++sat->events;
        mag = 32767;
    }
    return QNum{static_cast<std::int16_t>(negative ? -mag : mag), fmt};
}

QNum antilog2_mitchell(const LnsValue& l, QFormat fmt, SatCounter* sat) {
    if (l.zero) return QNum{0, fmt};
    return antilog2_from_wide(l.logmag, l.negative, fmt, sat);
}

EQuantity compute_E(QNum mu, QNum e_delayed, QNum sumF, SatCounter* sat) {
    EQuantity out;
    if (e_delayed.raw == 0) return out;  // zero gradient for every tap
    if (sumF.raw <= 0) throw std::invalid_argument("compute_E: sumF must be positive");
    const std::int32_t er = e_delayed.raw;
    const std::uint64_t emag = static_cast<std::uint64_t>(er < 0 ? -er : er);
    const std::uint64_t prod = static_cast<std::uint64_t>(mu.raw) * emag;
    const LnsValue num = mitchell_log2_raw(prod, mu.fmt.frac_bits + e_delayed.fmt.frac_bits);
    const LnsValue den = mitchell_log2_raw(static_cast<std::uint64_t>(sumF.raw), sumF.fmt.frac_bits);
    if (num.zero) return out;  // mu == 0
    out.e.zero = false;
    out.e.negative = er < 0;
    out.e.logmag = sat16(static_cast<std::int64_t>(num.logmag) - den.logmag, sat);
    return out;
}

QNum lns_gradient(const EQuantity& E, const LnsValue& logF_w, const LnsValue& log_u,
                  bool u_negative, QFormat weight_fmt, SatCounter* sat,
                  const LnsValue* log_psi) {
    if (E.e.zero || logF_w.zero || log_u.zero || (log_psi && log_psi->zero))
        return QNum{0, weight_fmt};
    std::int64_t exp = static_cast<std::int64_t>(E.e.logmag) + logF_w.logmag + log_u.logmag;
    if (log_psi) exp -= log_psi->logmag;
    return antilog2_from_wide(exp, E.e.negative != u_negative, weight_fmt, sat);
}

}  // namespace paf
