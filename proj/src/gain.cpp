#include "paf/gain.hpp"

#include <cmath>
#include <stdexcept>

namespace paf {

double eval_F(double w, const GainPolicy& policy) {
    const double a = std::fabs(w);
    switch (policy.kind) {
        case GainKind::identity:
            return 1.0;
        case GainKind::prop_abs:
            return a;
        case GainKind::mulaw_ln:
            return std::log(1.0 + a / policy.xi);
        case GainKind::mulaw_log2:
            return std::log2(1.0 + std::ldexp(a, policy.k));
    }
    throw std::invalid_argument("eval_F: unknown gain kind");
}

void compute_gains(std::span<const double> w, const GainPolicy& policy, std::span<double> g) {
    const size_t L = w.size();
    if (L == 0 || g.size() != L) throw std::invalid_argument("compute_gains: bad sizes");

    if (policy.kind == GainKind::identity) {
        const double inv = 1.0 / static_cast<double>(L);
        for (auto& x : g) x = inv;
        return;
    }

    if (policy.legacy_pnlms_max) {
        double fmax = policy.delta;
        for (size_t i = 0; i < L; ++i) fmax = std::max(fmax, eval_F(w[i], policy));
        const double floor = policy.rho * fmax;
        double sum = 0.0;
        for (size_t i = 0; i < L; ++i) {
            g[i] = std::max(floor, eval_F(w[i], policy));
            sum += g[i];
        }
        const double denom = sum / static_cast<double>(L);
        for (auto& x : g) x /= denom;
        return;
    }

    double sum = 0.0;
    for (size_t i = 0; i < L; ++i) {
        g[i] = eval_F(w[i], policy) + policy.rho;
        sum += g[i];
    }
    for (auto& x : g) x /= sum;
}

std::vector<double> compute_gains(std::span<const double> w, const GainPolicy& policy) {
    std::vector<double> g(w.size());
    compute_gains(w, policy, g);
    return g;
}

}  // namespace paf
