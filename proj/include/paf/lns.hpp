#ifndef PAF_LNS_HPP
#define PAF_LNS_HPP

#include <cstdint>

#include "paf/fixed.hpp"

namespace paf {

// Sign-plus-log2-magnitude value. logmag is Q5.10: integer part = position
// of the leading one relative to the binary point, fraction = the 10 bits
// immediately below the leading one (Mitchell's log2(1+x) ~= x, fraction
// truncated the way a barrel shifter drops bits). zero is the log-of-zero
// flag; logmag content is meaningless while it is set.
struct LnsValue {
    bool zero = true;
    bool negative = false;
    std::int16_t logmag = 0;  // Q5.10

    double logmag_value() const { return static_cast<double>(logmag) * kQ5_10.lsb(); }
};

inline constexpr int kLnsFracBits = 10;

// Leading-one detect + fraction extract on an arbitrary-width raw
// magnitude with `frac_bits` fraction bits. Shared by the 16-bit converter
// and the wide adder-tree outputs.
LnsValue mitchell_log2_raw(std::uint64_t mag, int frac_bits, bool negative = false);

// log2 of a 16-bit fixed-point value, sign carried alongside.
LnsValue log2_mitchell(QNum q);

// (1 + x) * 2^k back to fixed point: barrel shift of the 1-concatenated
// fraction, truncating on right shifts, saturating on overflow, zero on
// underflow below the target lsb.
QNum antilog2_mitchell(const LnsValue& l, QFormat fmt, SatCounter* sat = nullptr);
QNum antilog2_from_wide(std::int64_t logmag_raw, bool negative, QFormat fmt,
                        SatCounter* sat = nullptr);

// E = log2(mu * |e(n-M)| / sumF), sign of e carried through (the gain-sum
// denominator is always positive). Zero error flags the result so the
// whole gradient collapses to zero. The mu*e product keeps full precision
// into the leading-one detector.
struct EQuantity {
    LnsValue e;
};
EQuantity compute_E(QNum mu, QNum e_delayed, QNum sumF, SatCounter* sat = nullptr);

// Per-tap gradient 2^(E + log2(F[w]) + log2(|u|) - log2(psi)); the psi term
// is present only on the transform-domain path. Gradient sign is
// sign(e) XOR sign(u). Any zero-flagged operand gives a zero gradient.
QNum lns_gradient(const EQuantity& E, const LnsValue& logF_w, const LnsValue& log_u,
                  bool u_negative, QFormat weight_fmt, SatCounter* sat = nullptr,
                  const LnsValue* log_psi = nullptr);

}  // namespace paf

#endif
