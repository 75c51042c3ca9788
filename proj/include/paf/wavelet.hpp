#ifndef PAF_WAVELET_HPP
#define PAF_WAVELET_HPP

#include <span>
#include <string>
#include <vector>

namespace paf {

enum class WaveletFamily { haar_unnormalized, haar_orthonormal, sym4, db4 };

// Multi-level periodized DWT analysis matrix, built as the product of
// one-level block matrices (T_K (+) I) with circular wrap-around rows.
// Row order per level block is [approximations | details]; after `levels`
// applications the top band sits first:
//   [ A_levels | D_levels | D_{levels-1} | ... | D_1 ]
struct DwtMatrix {
    WaveletFamily family;
    int taps = 0;
    int levels = 0;
    std::vector<double> m;  // row-major taps x taps

    double at(int r, int c) const { return m[static_cast<size_t>(r) * taps + c]; }

    void apply(std::span<const double> in, std::span<double> out) const;
    std::vector<double> apply(std::span<const double> in) const;

    // Exact integer apply for the +/-1 un-normalized Haar (oracle for the
    // fixed-point sliding transform).
    void apply_int(std::span<const int> in, std::span<int> out) const;
};

DwtMatrix build_dwt_matrix(WaveletFamily family, int taps, int levels);

// Orthonormal DCT-II matrix (comparison transform for the sparsity study).
std::vector<double> build_dct_matrix(int taps);
std::vector<double> apply_matrix(std::span<const double> m, std::span<const double> v);

// Row-Gram diagonal of the un-normalized Haar matrix: 2^levels for the top
// approximation and detail bands, 2^j for the level-j detail band. These
// are the branch scale-ups the output path must divide back out; shift
// amounts are their log2.
struct ScalingDiag {
    std::vector<double> s;
    std::vector<int> shift;  // log2(s)
};
ScalingDiag scaling_diag(int taps, int levels);

// Scaling-corrected transform-domain filter output: sum_i w_i u_i / s_i,
// accumulated branch by branch (runs of equal s) the way the shift-based
// adder tree does. With s == 1 this is a plain inner product; with
// w = T w0, u = T u0 and the un-normalized Haar diagonal it equals
// w0' u0 exactly.
double scaled_output(std::span<const double> w_t, std::span<const double> u_t,
                     std::span<const double> s);

// Time-domain weights equivalent to 3-level un-normalized Haar transform
// weights: w = T' diag(1/s) w_t (the exact inverse of w_t = T w).
std::vector<double> haar3_scaled_inverse(std::span<const double> w_t);
void haar3_scaled_inverse(std::span<const double> w_t, std::span<double> out);

// Per-tap signal power tracker for transform-domain normalization:
//   psi_i <- beta psi_i + (1-beta) |u_i|    (abs, the hardware rule)
//   psi_i <- beta psi_i + (1-beta) u_i^2    (squared, reference form)
// kept at or above a fixed floor so 1/psi_i and log2(psi_i) stay defined.
struct PowerEstimator {
    std::vector<double> psi;
    double beta = 0.125;
    double floor = 0.00390625;  // 2^-8
    bool use_abs = true;

    PowerEstimator(int taps, double beta_, bool use_abs_ = true)
        : psi(static_cast<size_t>(taps), 0.00390625), beta(beta_), use_abs(use_abs_) {}

    void update(std::span<const double> u_t);
};

}  // namespace paf

#endif
