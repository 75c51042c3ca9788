#ifndef PAF_FILTER_HPP
#define PAF_FILTER_HPP

#include <span>
#include <vector>

#include "paf/gain.hpp"
#include "paf/sliding_haar.hpp"
#include "paf/wavelet.hpp"

namespace paf {

// State of one adaptive filter instance: weights, the regressor (newest
// first), and the snapshot pipeline behind delayed adaptation. A delayed
// update applies the (gain, regressor, error) triple captured `delay`
// iterations earlier, so for the first `delay` samples the weights sit at
// their initialization. With delay == 0 the pipeline degenerates to the
// plain in-place update.
//
// For transform-domain algorithms `w` holds the transform-domain weights
// and `u` the transformed regressor; everything else is unchanged.
//
// Single-owner: one instance is mutated sequentially. Independent
// instances are safe on separate threads.
struct FilterState {
    std::vector<double> w;
    std::vector<double> u;
    double mu = 0.25;
    double delta_p = 1e-4;  // normalization regularizer (Pt-NLMS / NLMS)
    int delay = 0;          // M

    FilterState(int taps, double mu_, int delay_ = 0);

    int taps() const { return static_cast<int>(w.size()); }

    // Shift x into the regressor; rejects non-finite samples.
    void push(double x);

    // -- snapshot ring used by the delayed update paths ---------------------
    struct Snapshot {
        std::vector<double> gain, regressor, power;
        double error = 0.0;
        bool valid = false;
    };
    std::vector<Snapshot> ring;
    size_t ring_pos = 0;

    // Stores the current snapshot and returns the one from `delay` steps
    // ago (nullptr while the pipeline is still priming).
    const Snapshot* rotate(std::span<const double> gain, std::span<const double> regressor,
                           double error, std::span<const double> power = {});

    std::vector<double> gain_scratch;
};

// w' u over the current regressor.
double filter_output(const FilterState& st);

// Original Pt-NLMS: w += mu G u e / (u' G u + delta_p). No delay path.
double step_pnlms(FilterState& st, const GainPolicy& policy, double d);

// PLMS: w += mu G u e (no normalization). Requires delay == 0.
double step_plms(FilterState& st, const GainPolicy& policy, double d);

// Delayed PLMS family: the update applies the snapshot from `delay`
// iterations ago. identity -> DLMS, prop_abs -> DPLMS, mulaw -> DMPLMS.
// With delay == 0 the trajectory is bit-identical to step_plms.
double step_delayed(FilterState& st, const GainPolicy& policy, double d);

// NLMS baseline, delayed when st.delay > 0 (DNLMS):
// w += mu u(n-M) e(n-M) / (u(n-M)' u(n-M) + delta_p).
double step_nlms(FilterState& st, double d);

// Transform-domain delayed update on an externally produced regressor u_t:
// output through the scaling-corrected tree, gradient divided per tap by
// the power estimate, delayed by st.delay.
double step_transform(FilterState& st, const GainPolicy& policy, PowerEstimator& power,
                      std::span<const double> u_t, std::span<const double> scaling, double d);

// DWMPLMS: push x through the sliding 3-level Haar and run step_transform
// on its coefficients.
double step_dwmplms(FilterState& st, const GainPolicy& policy, SlidingHaar3<double>& haar,
                    PowerEstimator& power, std::span<const double> scaling, double x, double d);

}  // namespace paf

#endif
