#include "paf/filter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paf {

FilterState::FilterState(int taps, double mu_, int delay_)
    : w(static_cast<size_t>(taps), 0.0),
      u(static_cast<size_t>(taps), 0.0),
      mu(mu_),
      delay(delay_),
      ring(static_cast<size_t>(delay_) + 1),
      gain_scratch(static_cast<size_t>(taps), 0.0) {
    if (taps < 1) throw std::invalid_argument("FilterState: taps must be >= 1");
    if (delay_ < 0) throw std::invalid_argument("FilterState: delay must be >= 0");
}

void FilterState::push(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("FilterState: non-finite input sample");
    std::copy_backward(u.begin(), u.end() - 1, u.end());
    u[0] = x;
}

const FilterState::Snapshot* FilterState::rotate(std::span<const double> gain,
                                                 std::span<const double> regressor,
                                                 double error, std::span<const double> power) {
    Snapshot& slot = ring[ring_pos];
    slot.gain.assign(gain.begin(), gain.end());
    slot.regressor.assign(regressor.begin(), regressor.end());
    slot.power.assign(power.begin(), power.end());
    slot.error = error;
    slot.valid = true;
    ring_pos = (ring_pos + 1) % ring.size();
    const Snapshot& oldest = ring[ring_pos];
    return oldest.valid ? &oldest : nullptr;
}

double filter_output(const FilterState& st) {
    double acc = 0.0;
    const size_t L = st.w.size();
    for (size_t i = 0; i < L; ++i) acc += st.w[i] * st.u[i];
    return acc;
}

double step_pnlms(FilterState& st, const GainPolicy& policy, double d) {
    const size_t L = st.w.size();
    const double e = d - filter_output(st);
    compute_gains(st.w, policy, st.gain_scratch);
    double denom = st.delta_p;
    for (size_t i = 0; i < L; ++i) denom += st.gain_scratch[i] * st.u[i] * st.u[i];
    const double scale = st.mu * e / denom;
    for (size_t i = 0; i < L; ++i) st.w[i] += scale * st.gain_scratch[i] * st.u[i];
    return e;
}

double step_delayed(FilterState& st, const GainPolicy& policy, double d) {
    const double e = d - filter_output(st);
    compute_gains(st.w, policy, st.gain_scratch);
    const FilterState::Snapshot* s = st.rotate(st.gain_scratch, st.u, e);
    if (s) {
        const size_t L = st.w.size();
        const double scale = st.mu * s->error;
        for (size_t i = 0; i < L; ++i) st.w[i] += scale * s->gain[i] * s->regressor[i];
    }
    return e;
}

double step_plms(FilterState& st, const GainPolicy& policy, double d) {
    if (st.delay != 0) throw std::logic_error("step_plms: delay must be 0 (use step_delayed)");
    return step_delayed(st, policy, d);
}

double step_nlms(FilterState& st, double d) {
    const double e = d - filter_output(st);
    const FilterState::Snapshot* s = st.rotate({}, st.u, e);
    if (s) {
        const size_t L = st.w.size();
        double norm2 = st.delta_p;
        for (size_t i = 0; i < L; ++i) norm2 += s->regressor[i] * s->regressor[i];
        const double scale = st.mu * s->error / norm2;
        for (size_t i = 0; i < L; ++i) st.w[i] += scale * s->regressor[i];
    }
    return e;
}

double step_transform(FilterState& st, const GainPolicy& policy, PowerEstimator& power,
                      std::span<const double> u_t, std::span<const double> scaling, double d) {
    const size_t L = st.w.size();
    if (u_t.size() != L || scaling.size() != L)
        throw std::invalid_argument("step_transform: size mismatch");
    std::copy(u_t.begin(), u_t.end(), st.u.begin());
    power.update(u_t);
    const double e = d - scaled_output(st.w, st.u, scaling);
    compute_gains(st.w, policy, st.gain_scratch);
    const FilterState::Snapshot* s = st.rotate(st.gain_scratch, st.u, e, power.psi);
    if (s) {
        const double scale = st.mu * s->error;
        for (size_t i = 0; i < L; ++i)
            st.w[i] += scale * s->gain[i] * s->regressor[i] / s->power[i];
    }
    return e;
}

double step_dwmplms(FilterState& st, const GainPolicy& policy, SlidingHaar3<double>& haar,
                    PowerEstimator& power, std::span<const double> scaling, double x, double d) {
    if (!std::isfinite(x)) throw std::invalid_argument("step_dwmplms: non-finite input sample");
    haar.push(x);
    return step_transform(st, policy, power, haar.coeffs(), scaling, d);
}

}  // namespace paf
