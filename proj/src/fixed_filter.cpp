#include "paf/fixed_filter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paf {

namespace {

// gamma word for one tap under the hardware gain laws. prop_abs keeps the
// weight format; the mu-law value is already a log word, so it lives in
// Q5.10. identity taps carry the constant 1 + rho.
std::int32_t gamma_word(std::int16_t w_raw, GainKind kind, int k, std::int16_t rho_raw,
                        QFormat gamma_fmt, SatCounter* sat) {
    const std::int32_t mag = w_raw < 0 ? -static_cast<std::int32_t>(w_raw) : w_raw;
    switch (kind) {
        case GainKind::identity:
            return (1 << gamma_fmt.frac_bits) + rho_raw;
        case GainKind::prop_abs:
            return sat16(static_cast<std::int64_t>(mag) + rho_raw, sat);
        case GainKind::mulaw_log2: {
            // log2(1 + |w| 2^k) via the same leading-one detector
            const std::uint64_t arg =
                (std::uint64_t{1} << 14) + (static_cast<std::uint64_t>(mag) << k);
            const LnsValue lv = mitchell_log2_raw(arg, 14);
            return static_cast<std::int32_t>(lv.logmag) + rho_raw;
        }
        default:
            throw std::invalid_argument("fixed filter: unsupported gain kind (use mulaw_log2)");
    }
}

QFormat gamma_format(GainKind kind) {
    return kind == GainKind::prop_abs ? kQ1_14 : kQ5_10;
}

// adder-tree sum format per gain law, sized so paper-scale sums never clip
QFormat sum_format(GainKind kind) {
    return kind == GainKind::prop_abs ? kQ5_10w : kQ10_5;
}

void check_config(const FixedFilterConfig& cfg) {
    if (cfg.taps < 1) throw std::invalid_argument("fixed filter: taps must be >= 1");
    if (cfg.delay < 0) throw std::invalid_argument("fixed filter: delay must be >= 0");
    if (std::fabs(cfg.mu) >= 2.0)
        throw std::invalid_argument("fixed filter: mu must fit Q1.14 (|mu| < 2)");
}

}  // namespace

FixedPlmsFilter::FixedPlmsFilter(const FixedFilterConfig& cfg)
    : cfg_(cfg),
      gamma_fmt_(gamma_format(cfg.kind)),
      sum_fmt_(sum_format(cfg.kind)),
      w_(static_cast<size_t>(cfg.taps), 0),
      u_(static_cast<size_t>(cfg.taps), 0),
      gamma_(static_cast<size_t>(cfg.taps), 0),
      ring_(static_cast<size_t>(cfg.delay) + 1) {
    check_config(cfg);
    mu_q_ = quantize(cfg.mu, kQ1_14, &sat_);
    rho_raw_ = quantize(cfg.rho, gamma_fmt_, &sat_).raw;
    if (rho_raw_ <= 0 && cfg.kind != GainKind::identity)
        throw std::invalid_argument("fixed filter: rho quantizes to zero");
    for (auto& s : ring_) {
        s.logfu.assign(static_cast<size_t>(cfg.taps), 0);
        s.flags.assign(static_cast<size_t>(cfg.taps), 0);
    }
}

void FixedPlmsFilter::compute_gamma() {
    const size_t L = w_.size();
    for (size_t i = 0; i < L; ++i)
        gamma_[i] = gamma_word(w_[i], cfg_.kind, cfg_.k, rho_raw_, gamma_fmt_, &sat_);
}

double FixedPlmsFilter::step(double x, double d) {
    const size_t L = w_.size();
    const QNum xq = quantize(x, kQ1_14, &sat_);
    const QNum dq = quantize(d, kQ3_12, &sat_);
    std::copy_backward(u_.begin(), u_.end() - 1, u_.end());
    u_[0] = xq.raw;

    // filter output: Q2.28 adder tree, requantized to Q3.12
    std::int64_t acc = 0;
    for (size_t i = 0; i < L; ++i) acc += static_cast<std::int64_t>(w_[i]) * u_[i];
    const QNum yq{sat16(rne_shift(acc, 28 - 12), &sat_), kQ3_12};
    const QNum eq = sat_sub(dq, yq, &sat_);

    compute_gamma();
    std::int64_t gsum = 0;
    for (size_t i = 0; i < L; ++i) gsum += gamma_[i];
    const QNum sumF{sat16(rne_shift(gsum, gamma_fmt_.frac_bits - sum_fmt_.frac_bits), &sat_),
                    sum_fmt_};
    const EQuantity E = compute_E(mu_q_, eq, sumF, &sat_);

    Snapshot& slot = ring_[ring_pos_];
    slot.e_log = E.e;
    for (size_t i = 0; i < L; ++i) {
        const LnsValue lg = mitchell_log2_raw(static_cast<std::uint64_t>(gamma_[i]),
                                              gamma_fmt_.frac_bits);
        const std::int32_t ur = u_[i];
        const std::uint64_t umag = static_cast<std::uint64_t>(ur < 0 ? -ur : ur);
        const LnsValue lu = mitchell_log2_raw(umag, 14);
        slot.flags[i] = static_cast<std::uint8_t>((lu.zero ? 1 : 0) | (ur < 0 ? 2 : 0));
        slot.logfu[i] = static_cast<std::int32_t>(lg.logmag) + lu.logmag;
    }
    slot.valid = true;
    ring_pos_ = (ring_pos_ + 1) % ring_.size();

    const Snapshot& old = ring_[ring_pos_];
    if (old.valid && !old.e_log.zero) {
        for (size_t i = 0; i < L; ++i) {
            if (old.flags[i] & 1) continue;  // u was zero
            const std::int64_t expo = static_cast<std::int64_t>(old.e_log.logmag) + old.logfu[i];
            const QNum g = antilog2_from_wide(expo, old.e_log.negative != ((old.flags[i] & 2) != 0),
                                              kQ1_14, &sat_);
            w_[i] = sat16(static_cast<std::int64_t>(w_[i]) + g.raw, &sat_);
        }
    }

    if (dump_) {
        *dump_ << n_ << ',' << xq.raw << ',' << yq.raw << ',' << eq.raw << ','
               << (E.e.zero ? 1 : 0) << ',' << (E.e.negative ? 1 : 0) << ',' << E.e.logmag << ','
               << sumF.raw << ',' << sat_.events << '\n';
    }
    ++n_;
    return eq.value();
}

std::vector<double> FixedPlmsFilter::weights() const {
    std::vector<double> out(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) out[i] = static_cast<double>(w_[i]) * kQ1_14.lsb();
    return out;
}

void FixedPlmsFilter::set_dump(std::ostream* os) { dump_ = os; }

void FixedPlmsFilter::dump_header(std::ostream& os) {
    os << "n,x_q1_14,y_q3_12,e_q3_12,E_zero,E_neg,E_logmag_q5_10,sumF_raw,sat_events\n";
}

// ---------------------------------------------------------------------------

FixedWmplmsFilter::FixedWmplmsFilter(const FixedFilterConfig& cfg)
    : cfg_(cfg),
      gamma_fmt_(gamma_format(cfg.kind)),
      sum_fmt_(sum_format(cfg.kind)),
      haar_(cfg.taps),
      scaling_(scaling_diag(cfg.taps, 3)),
      w_(static_cast<size_t>(cfg.taps), 0),
      psi_(static_cast<size_t>(cfg.taps), 64),  // 2^-8 floor in Q.14
      gamma_(static_cast<size_t>(cfg.taps), 0),
      ring_(static_cast<size_t>(cfg.delay) + 1) {
    check_config(cfg);
    mu_q_ = quantize(cfg.mu, kQ1_14, &sat_);
    rho_raw_ = quantize(cfg.rho, gamma_fmt_, &sat_).raw;
    if (rho_raw_ <= 0 && cfg.kind != GainKind::identity)
        throw std::invalid_argument("fixed filter: rho quantizes to zero");
    for (auto& s : ring_) {
        s.logfu.assign(static_cast<size_t>(cfg.taps), 0);
        s.flags.assign(static_cast<size_t>(cfg.taps), 0);
    }
}

double FixedWmplmsFilter::step(double x, double d) {
    const size_t L = w_.size();
    const QNum xq = quantize(x, kQ1_14, &sat_);
    const QNum dq = quantize(d, kQ3_12, &sat_);
    haar_.push(xq.raw);
    const std::span<const std::int32_t> ut = haar_.coeffs();

    // psi <- psi/8 + (|u_T| - |u_T|/8), shift-only, floored at 2^-8
    for (size_t i = 0; i < L; ++i) {
        const std::int32_t mag = ut[i] < 0 ? -ut[i] : ut[i];
        std::int32_t p = (psi_[i] >> 3) + (mag - (mag >> 3));
        if (p < 64) p = 64;
        psi_[i] = p;
    }

    // muxed adder tree: branch partial sums right-shifted by log2(s)
    std::int64_t acc = 0;
    size_t i = 0;
    while (i < L) {
        const int sh = scaling_.shift[i];
        std::int64_t branch = 0;
        while (i < L && scaling_.shift[i] == sh) {
            branch += static_cast<std::int64_t>(w_[i]) * ut[i];
            ++i;
        }
        acc += branch >> sh;
    }
    const QNum yq{sat16(rne_shift(acc, 28 - 12), &sat_), kQ3_12};
    const QNum eq = sat_sub(dq, yq, &sat_);

    for (size_t t = 0; t < L; ++t)
        gamma_[t] = gamma_word(w_[t], cfg_.kind, cfg_.k, rho_raw_, gamma_fmt_, &sat_);
    std::int64_t gsum = 0;
    for (size_t t = 0; t < L; ++t) gsum += gamma_[t];
    const QNum sumF{sat16(rne_shift(gsum, gamma_fmt_.frac_bits - sum_fmt_.frac_bits), &sat_),
                    sum_fmt_};
    const EQuantity E = compute_E(mu_q_, eq, sumF, &sat_);

    Snapshot& slot = ring_[ring_pos_];
    slot.e_log = E.e;
    for (size_t t = 0; t < L; ++t) {
        const LnsValue lg = mitchell_log2_raw(static_cast<std::uint64_t>(gamma_[t]),
                                              gamma_fmt_.frac_bits);
        const std::int32_t ur = ut[t];
        const std::uint64_t umag = static_cast<std::uint64_t>(ur < 0 ? -static_cast<std::int64_t>(ur) : ur);
        const LnsValue lu = mitchell_log2_raw(umag, 14);
        const LnsValue lp = mitchell_log2_raw(static_cast<std::uint64_t>(psi_[t]), 14);
        slot.flags[t] = static_cast<std::uint8_t>((lu.zero ? 1 : 0) | (ur < 0 ? 2 : 0));
        slot.logfu[t] = static_cast<std::int32_t>(lg.logmag) + lu.logmag - lp.logmag;
    }
    slot.valid = true;
    ring_pos_ = (ring_pos_ + 1) % ring_.size();

    const Snapshot& old = ring_[ring_pos_];
    if (old.valid && !old.e_log.zero) {
        for (size_t t = 0; t < L; ++t) {
            if (old.flags[t] & 1) continue;
            const std::int64_t expo = static_cast<std::int64_t>(old.e_log.logmag) + old.logfu[t];
            const QNum g = antilog2_from_wide(expo, old.e_log.negative != ((old.flags[t] & 2) != 0),
                                              kQ1_14, &sat_);
            w_[t] = sat16(static_cast<std::int64_t>(w_[t]) + g.raw, &sat_);
        }
    }
    return eq.value();
}

std::vector<double> FixedWmplmsFilter::weights() const {
    std::vector<double> wt(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) wt[i] = static_cast<double>(w_[i]) * kQ1_14.lsb();
    return haar3_scaled_inverse(wt);
}

}  // namespace paf
