#ifndef PAF_FIXED_FILTER_HPP
#define PAF_FIXED_FILTER_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include "paf/fixed.hpp"
#include "paf/gain.hpp"
#include "paf/lns.hpp"
#include "paf/sliding_haar.hpp"
#include "paf/wavelet.hpp"

namespace paf {

// 16-bit datapath model of the delayed proportionate filters. Signals and
// weights ride in Q1.14, the error in Q3.12, log-domain words in Q5.10.
// The gradient never sees a multiplier: per tap it is
//   2^(E + log2(gamma_i(n-M)) + log2(|u(n-M)|))        (time domain)
// with E = log2(mu |e(n-M)| / sum gamma(n-M)), the sign recovered as
// sign(e) XOR sign(u), all through Mitchell log/antilog conversion. The
// per-tap log words are summed and delayed M steps to meet the pipelined
// update, exactly like the register file they stand in for.
struct FixedFilterConfig {
    int taps = 512;
    int delay = 5;
    GainKind kind = GainKind::mulaw_log2;
    int k = 6;          // mulaw_log2 knee
    double mu = 0.25;   // must fit Q1.14
    double rho = 0.01;  // gain floor
};

class FixedPlmsFilter {
public:
    explicit FixedPlmsFilter(const FixedFilterConfig& cfg);

    // Quantizes (x, d), runs one iteration, returns the fixed-point error
    // as a double for monitoring.
    double step(double x, double d);

    std::vector<double> weights() const;  // dequantized Q1.14
    const std::vector<std::int16_t>& raw_weights() const { return w_; }
    std::uint64_t saturation_events() const { return sat_.events; }

    // Per-sample CSV of the raw datapath words (for RTL cross-checks).
    void set_dump(std::ostream* os);
    static void dump_header(std::ostream& os);

private:
    struct Snapshot {
        LnsValue e_log;                  // E quantity
        std::vector<std::int32_t> logfu; // log2(gamma_i) + log2(|u_i|), Q5.10
        std::vector<std::uint8_t> flags; // bit0 = u zero, bit1 = u negative
        bool valid = false;
    };

    void compute_gamma();

    FixedFilterConfig cfg_;
    QFormat gamma_fmt_;
    QFormat sum_fmt_;
    QNum mu_q_;
    std::int16_t rho_raw_;

    std::vector<std::int16_t> w_, u_;
    std::vector<std::int32_t> gamma_;
    std::vector<Snapshot> ring_;
    size_t ring_pos_ = 0;
    SatCounter sat_;
    std::ostream* dump_ = nullptr;
    long n_ = 0;
};

// Transform-domain variant: the regressor is the integer sliding 3-level
// un-normalized Haar transform of the Q1.14 input, the output runs through
// the shift-scaled adder tree, and the per-tap power word psi (shift-only
// beta = 1/8 update on |u_T|, floored at 2^-8) joins the gradient exponent
// as -log2(psi).
class FixedWmplmsFilter {
public:
    FixedWmplmsFilter(const FixedFilterConfig& cfg);

    double step(double x, double d);

    // Equivalent time-domain weights (scaled inverse of the dequantized
    // transform weights).
    std::vector<double> weights() const;
    std::uint64_t saturation_events() const { return sat_.events; }

private:
    struct Snapshot {
        LnsValue e_log;
        std::vector<std::int32_t> logfu;  // log2(gamma) + log2(|u_T|) - log2(psi)
        std::vector<std::uint8_t> flags;
        bool valid = false;
    };

    FixedFilterConfig cfg_;
    QFormat gamma_fmt_;
    QFormat sum_fmt_;
    QNum mu_q_;
    std::int16_t rho_raw_;

    SlidingHaar3<std::int32_t> haar_;
    ScalingDiag scaling_;
    std::vector<std::int16_t> w_;
    std::vector<std::int32_t> psi_;  // Q?.14 power words
    std::vector<std::int32_t> gamma_;
    std::vector<Snapshot> ring_;
    size_t ring_pos_ = 0;
    SatCounter sat_;
};

}  // namespace paf

#endif
