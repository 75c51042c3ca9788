#ifndef PAF_EXPERIMENT_HPP
#define PAF_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "paf/gain.hpp"
#include "paf/signals.hpp"

namespace paf {

// Algorithm ids as exposed on the CLI. The d-prefixed forms default to an
// adaptation delay of 5; the gain law comes with the id (identity for
// (d)lms, |w| for (d)plms and pnlms, base-2 mu-law for the m-forms).
enum class Algorithm {
    lms, dlms, nlms, dnlms, pnlms, plms, dplms, mplms, dmplms, dwmplms, dwmplms_sym4
};

enum class ArithPath { float64, fixed16 };

Algorithm algorithm_from_name(const std::string& name);
const char* algorithm_name(Algorithm a);

struct ExperimentSpec {
    Algorithm algo = Algorithm::dmplms;
    ArithPath arith = ArithPath::float64;
    int taps = 512;
    int delay = -1;  // -1 -> algorithm default
    double mu = 0.25;
    double rho = 0.01;
    double delta = 0.01;     // legacy PNLMS startup guard
    double delta_p = 1e-4;   // normalization regularizer
    double xi = 0.001;       // mulaw_ln knee
    int k = 6;               // mulaw_log2 knee
    GainKind gain_override = GainKind::identity;
    bool has_gain_override = false;

    InputSpec input;
    enum class SystemKind { profile, reference, reference_flat, file } system_kind =
        SystemKind::reference;
    SystemProfile profile = SystemProfile::sparse;
    std::string system_path;

    double enr_db = 30.0;
    long iterations = 10000;
    int trials = 50;
    std::uint64_t seed = 1;
    long shift_at = -1;  // mid-run echo-path shift (tracking); <0 disables
    int shift_by = 12;
    double beta = 0.125;  // transform-domain power forgetting factor
    int threads = 0;      // 0 -> hardware concurrency
    std::string label;    // curve label override
};

// Fills derived fields (delay default, label) and checks invariants;
// throws std::invalid_argument with a message naming the offending key.
void validate(ExperimentSpec& spec);

int resolved_delay(const ExperimentSpec& spec);
GainPolicy resolved_policy(const ExperimentSpec& spec);
SystemModel resolve_system(const ExperimentSpec& spec);

struct LearningCurve {
    std::string label;
    std::vector<double> msd_db;  // normalized MSD per iteration, trial-averaged
    bool diverged = false;
    long diverged_at = -1;
    std::uint64_t saturation_events = 0;
    std::uint64_t spec_hash = 0;
    double wall_seconds = 0.0;
};

// Monte-Carlo learning curve: trial t draws its input and noise streams
// from seed + 1 + t, the unknown system is fixed per experiment (drawn
// from `seed`), results are averaged in trial order so the outcome is
// byte-identical for any thread count. A trial whose MSD passes +60 dB
// flags and truncates the curve.
LearningCurve run(const ExperimentSpec& spec);

// Mean linear MSD over the trailing `tail_fraction` of the curve, in dB.
double steady_state_db(const LearningCurve& c, double tail_fraction = 0.1);

struct SpeedupResult {
    bool a_reached = false, b_reached = false;
    long a_iter = -1, b_iter = -1;
    double ratio = 0.0;        // b_iter / a_iter (how much faster a is)
    double lower_bound = 0.0;  // b_len / a_iter when only b never crossed
};
SpeedupResult speedup(const LearningCurve& a, const LearningCurve& b, double threshold_db);

std::vector<LearningCurve> m_sweep(const ExperimentSpec& base, const std::vector<int>& delays);

struct FixedVsFloat {
    LearningCurve flt, fxd;
    double steady_dev_db = 0.0;
    double max_dev_db = 0.0;
    std::uint64_t saturation_events = 0;
};
FixedVsFloat fixed_vs_float(const ExperimentSpec& spec);

// Plain-text experiment description, one `key = value` per line, '#'
// comments. Keys mirror the ExperimentSpec fields (see README).
ExperimentSpec parse_spec_file(const std::string& path);
ExperimentSpec parse_spec_lines(const std::vector<std::string>& lines);

// ---------------------------------------------------------------------------
// Figure presets
// ---------------------------------------------------------------------------

struct PresetOptions {
    int trials = -1;           // -1 -> preset default (paper_scale forces 500)
    bool paper_scale = false;
    bool with_sym4 = false;    // add the matrix-transform sym4 curve to fig8/fig11
    std::uint64_t seed = 1;
    int threads = 0;
};

struct PresetResult {
    std::string name;
    std::vector<LearningCurve> curves;
    std::vector<std::string> notes;  // extra artifacts (sparsity table, deviations)
    bool any_diverged = false;
};

// fig1  PNLMS vs reformulated PLMS vs NLMS, white input
// fig2  PLMS vs DPLMS (+NLMS), white input
// fig3  MPLMS vs DMPLMS, white input
// fig5  fixed16 vs float, DPLMS and DMPLMS
// fig6  DMPLMS delay sweep on AR(1) input (+DNLMS)
// fig7  sparseness of h under DWT vs DCT (table in notes)
// fig8  {white, ar1} x {sparse, semi, dispersive} grid
// fig11 speech-input tracking with a mid-run echo-path shift
PresetResult run_preset(const std::string& name, const PresetOptions& opt);
std::vector<std::string> preset_names();

}  // namespace paf

#endif
