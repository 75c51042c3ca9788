#ifndef PAF_SIGNALS_HPP
#define PAF_SIGNALS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "paf/rng.hpp"

namespace paf {

// ---------------------------------------------------------------------------
// Unknown systems
// ---------------------------------------------------------------------------

// Norm-ratio sparseness in [0, 1]: 1 for a single active tap, 0 for a
// uniform response. Scale- and permutation-invariant. Throws on the zero
// vector.
double sparseness(std::span<const double> h);

enum class SystemProfile { sparse, semi_sparse, dispersive };

struct SystemModel {
    std::vector<double> h;
    std::string label;
    double s_m = 0.0;  // cached sparseness of h
};

// Synthetic echo path: a contiguous block of `active` exponentially decaying
// taps with random signs at a random offset, unit l2 norm. The decay rate is
// solved by bisection so that the measured sparseness hits `target_sm`
// (the measure depends only on the magnitude profile, so the solve is exact
// up to the bisection tolerance). Throws if the target is unreachable for
// the given active count.
SystemModel gen_system_tuned(int taps, int active, double target_sm,
                             std::uint64_t seed, const std::string& label);

// Named profiles: sparse 0.8960, semi 0.5560, dispersive 0.3486.
SystemModel gen_system(int taps, SystemProfile profile, std::uint64_t seed);

// The 512-tap / 64-active-tap reference system (S_m = 0.8637) used by the
// white-input comparison experiments.
SystemModel reference_sparse_system(std::uint64_t seed);

// Same sparseness from 16 near-equal active taps: every active coefficient
// is large, which keeps the per-tap fixed-point gradients above the weight
// lsb (used by the fixed-vs-float study).
SystemModel reference_flat_system(std::uint64_t seed);

// h delayed by k taps, head zero-filled, tail truncated. 0 <= k < L.
SystemModel shift_system(const SystemModel& s, int k);

// Plain text, one coefficient per line. '#' starts a comment line.
SystemModel load_system(const std::string& path);

// ---------------------------------------------------------------------------
// Input sources
// ---------------------------------------------------------------------------

enum class InputKind { white, uniform, ar1, speech_like, file };

struct InputSpec {
    InputKind kind = InputKind::white;
    double sigma_u2 = 1.0;  // output variance (white, ar1) or RMS^2 target (speech)
    double pole = 0.95;     // ar1
    std::string path;       // file
};

// Streaming sample source, deterministic for a fixed seed.
class SignalSource {
public:
    virtual ~SignalSource() = default;
    virtual double next() = 0;
};

std::unique_ptr<SignalSource> make_source(const InputSpec& spec, std::uint64_t seed);

// Whole stream up front (used by tests and by ENR pre-measurement for
// file/speech inputs).
std::vector<double> gen_input(const InputSpec& spec, std::uint64_t seed, long n);

// 16-bit PCM mono WAV loader (8 kHz expected; other rates are accepted with
// a note left to the caller). Samples scaled to [-1, 1).
std::vector<double> load_wav(const std::string& path);

// ---------------------------------------------------------------------------
// Observation
// ---------------------------------------------------------------------------

// Noise level for a target echo-to-noise ratio. Echo power is exact for
// white and ar1 inputs (h' R h with the analytic autocovariance) and is
// measured from a dry run for file/speech inputs. enr_db = +inf disables
// noise.
double noise_sigma_for_enr(const InputSpec& in, std::span<const double> h, double enr_db,
                           std::uint64_t seed, long n_measure = 100000);

// d(n) = h' u(n) + v(n) for a whole input stream (zero-padded history).
std::vector<double> observe(std::span<const double> h, std::span<const double> u,
                            double noise_sigma, std::uint64_t noise_seed);

}  // namespace paf

#endif
