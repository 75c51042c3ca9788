#ifndef PAF_GAIN_HPP
#define PAF_GAIN_HPP

#include <span>
#include <vector>

namespace paf {

// Per-tap gain laws. The proportionate family assigns each tap an update
// gain driven by F[|w_i|]:
//   identity    g_i = 1/L            (plain LMS with effective step mu/L)
//   prop_abs    F = |w|              (PNLMS/PLMS)
//   mulaw_ln    F = ln(1 + |w|/xi)   (MPNLMS)
//   mulaw_log2  F = log2(1 + |w| * 2^k)   (hardware form of the mu-law gain)
enum class GainKind { identity, prop_abs, mulaw_ln, mulaw_log2 };

struct GainPolicy {
    GainKind kind = GainKind::prop_abs;
    double rho = 0.01;  // additive gain floor for inactive taps
    double xi = 0.001;  // mulaw_ln knee
    int k = 6;          // mulaw_log2 knee exponent

    // Original PNLMS gain path: gamma_i = max(rho*gamma_mx, F[|w_i|]) with
    // gamma_mx = max(delta, F[|w_0|], ..., F[|w_{L-1}|]) and the 1/L
    // averaging denominator, so the gains sum to L instead of 1.
    bool legacy_pnlms_max = false;
    double delta = 0.01;  // startup guard for the legacy max
};

// F[|w|] for one coefficient under the active law (identity returns 1).
double eval_F(double w, const GainPolicy& policy);

// Gain vector for a weight vector. Simplified path: gamma_i = F[|w_i|]+rho,
// g_i = gamma_i / sum(gamma), so sum(g) == 1 and every g_i > 0. Legacy path:
// the max-based PNLMS rule with sum(g) == L.
void compute_gains(std::span<const double> w, const GainPolicy& policy, std::span<double> g);
std::vector<double> compute_gains(std::span<const double> w, const GainPolicy& policy);

}  // namespace paf

#endif
