#include "paf/wavelet.hpp"

#include <cmath>
#include <stdexcept>

namespace paf {

namespace {

// Orthonormal decomposition low-pass tables (sum = sqrt(2), norm = 1).
const double kDb4[8] = {
    0.230377813308855, 0.714846570552542, 0.630880767929590, -0.027983769416984,
    -0.187034811718881, 0.030841381835987, 0.032883011666983, -0.010597401784997};
const double kSym4[8] = {
    0.032223100604043, -0.012603967262038, -0.099219543576847, 0.297857795605277,
    0.803738751805916, 0.497618667632015, -0.029635527645999, -0.075765714789273};

void filters_for(WaveletFamily family, std::vector<double>& h, std::vector<double>& g) {
    switch (family) {
        case WaveletFamily::haar_unnormalized:
            h = {1.0, 1.0};
            break;
        case WaveletFamily::haar_orthonormal:
            h = {std::sqrt(0.5), std::sqrt(0.5)};
            break;
        case WaveletFamily::sym4:
            h.assign(kSym4, kSym4 + 8);
            break;
        case WaveletFamily::db4:
            h.assign(kDb4, kDb4 + 8);
            break;
        default:
            throw std::invalid_argument("unknown wavelet family");
    }
    const size_t K = h.size();
    g.resize(K);
    for (size_t t = 0; t < K; ++t) g[t] = (t % 2 == 0 ? 1.0 : -1.0) * h[K - 1 - t];
}

}  // namespace

void DwtMatrix::apply(std::span<const double> in, std::span<double> out) const {
    for (int r = 0; r < taps; ++r) {
        double acc = 0.0;
        const double* row = &m[static_cast<size_t>(r) * taps];
        for (int c = 0; c < taps; ++c) acc += row[c] * in[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc;
    }
}

std::vector<double> DwtMatrix::apply(std::span<const double> in) const {
    std::vector<double> out(static_cast<size_t>(taps));
    apply(in, out);
    return out;
}

void DwtMatrix::apply_int(std::span<const int> in, std::span<int> out) const {
    if (family != WaveletFamily::haar_unnormalized)
        throw std::invalid_argument("apply_int: only defined for the +/-1 Haar matrix");
    for (int r = 0; r < taps; ++r) {
        long acc = 0;
        const double* row = &m[static_cast<size_t>(r) * taps];
        for (int c = 0; c < taps; ++c) {
            const double e = row[c];
            if (e > 0.5) acc += in[static_cast<size_t>(c)];
            else if (e < -0.5) acc -= in[static_cast<size_t>(c)];
        }
        out[static_cast<size_t>(r)] = static_cast<int>(acc);
    }
}

DwtMatrix build_dwt_matrix(WaveletFamily family, int taps, int levels) {
    if (taps < 2 || (taps & (taps - 1)) != 0)
        throw std::invalid_argument("build_dwt_matrix: taps must be a power of two");
    if (levels < 0 || (1 << levels) > taps)
        throw std::invalid_argument("build_dwt_matrix: invalid level count");

    std::vector<double> h, g;
    filters_for(family, h, g);
    const int flen = static_cast<int>(h.size());
    if (levels > 0 && taps >> (levels - 1) < flen)
        throw std::invalid_argument("build_dwt_matrix: filter longer than top-level block");

    DwtMatrix T;
    T.family = family;
    T.taps = taps;
    T.levels = levels;
    T.m.assign(static_cast<size_t>(taps) * taps, 0.0);
    for (int i = 0; i < taps; ++i) T.m[static_cast<size_t>(i) * taps + i] = 1.0;

    std::vector<double> rows(static_cast<size_t>(taps) * taps);
    for (int lev = 1; lev <= levels; ++lev) {
        const int K = taps >> (lev - 1);
        // left-multiply by (B (+) I): only the first K rows change;
        // approximation rows land on top, detail rows below them
        std::copy(T.m.begin(), T.m.begin() + static_cast<size_t>(K) * taps, rows.begin());
        for (int j = 0; j < K / 2; ++j) {
            double* lo = &T.m[static_cast<size_t>(j) * taps];
            double* hi = &T.m[static_cast<size_t>(K / 2 + j) * taps];
            for (int c = 0; c < taps; ++c) lo[c] = hi[c] = 0.0;
            for (int t = 0; t < flen; ++t) {
                const double* src = &rows[static_cast<size_t>((2 * j + t) % K) * taps];
                const double hc = h[static_cast<size_t>(t)];
                const double gc = g[static_cast<size_t>(t)];
                for (int c = 0; c < taps; ++c) {
                    lo[c] += hc * src[c];
                    hi[c] += gc * src[c];
                }
            }
        }
    }
    return T;
}

std::vector<double> build_dct_matrix(int taps) {
    std::vector<double> m(static_cast<size_t>(taps) * taps);
    const double pi = 3.14159265358979323846;
    for (int r = 0; r < taps; ++r) {
        const double a = r == 0 ? std::sqrt(1.0 / taps) : std::sqrt(2.0 / taps);
        for (int c = 0; c < taps; ++c)
            m[static_cast<size_t>(r) * taps + c] = a * std::cos(pi * (c + 0.5) * r / taps);
    }
    return m;
}

std::vector<double> apply_matrix(std::span<const double> m, std::span<const double> v) {
    const size_t n = v.size();
    std::vector<double> out(n, 0.0);
    for (size_t r = 0; r < n; ++r) {
        double acc = 0.0;
        for (size_t c = 0; c < n; ++c) acc += m[r * n + c] * v[c];
        out[r] = acc;
    }
    return out;
}

ScalingDiag scaling_diag(int taps, int levels) {
    if (taps < 1 || (taps & (taps - 1)) != 0)
        throw std::invalid_argument("scaling_diag: taps must be a power of two");
    if (levels < 0 || (1 << levels) > taps)
        throw std::invalid_argument("scaling_diag: invalid level count");
    ScalingDiag d;
    d.s.assign(static_cast<size_t>(taps), 1.0);
    d.shift.assign(static_cast<size_t>(taps), 0);
    if (levels == 0) return d;
    int pos = 0;
    auto fill = [&](int count, int shift) {
        for (int i = 0; i < count; ++i, ++pos) {
            d.s[static_cast<size_t>(pos)] = static_cast<double>(1 << shift);
            d.shift[static_cast<size_t>(pos)] = shift;
        }
    };
    fill(taps >> levels, levels);  // top approximations
    for (int lev = levels; lev >= 1; --lev) fill(taps >> lev, lev);  // detail bands
    return d;
}

double scaled_output(std::span<const double> w_t, std::span<const double> u_t,
                     std::span<const double> s) {
    const size_t L = w_t.size();
    if (u_t.size() != L || s.size() != L)
        throw std::invalid_argument("scaled_output: size mismatch");
    double y = 0.0;
    size_t i = 0;
    while (i < L) {
        const double si = s[i];
        double branch = 0.0;
        while (i < L && s[i] == si) {
            branch += w_t[i] * u_t[i];
            ++i;
        }
        y += branch / si;
    }
    return y;
}

std::vector<double> haar3_scaled_inverse(std::span<const double> w_t) {
    std::vector<double> w(w_t.size(), 0.0);
    haar3_scaled_inverse(w_t, w);
    return w;
}

void haar3_scaled_inverse(std::span<const double> w_t, std::span<double> w) {
    const int L = static_cast<int>(w_t.size());
    if (L < 8 || L % 8 != 0)
        throw std::invalid_argument("haar3_scaled_inverse: length must be a multiple of 8");
    if (static_cast<int>(w.size()) != L)
        throw std::invalid_argument("haar3_scaled_inverse: output size mismatch");
    std::fill(w.begin(), w.end(), 0.0);
    const int l8 = L / 8, l4 = L / 4, l2 = L / 2;
    for (int j = 0; j < l8; ++j) {
        const double a = w_t[static_cast<size_t>(j)] / 8.0;
        const double d = w_t[static_cast<size_t>(l8 + j)] / 8.0;
        for (int t = 0; t < 4; ++t) w[static_cast<size_t>(8 * j + t)] += a + d;
        for (int t = 4; t < 8; ++t) w[static_cast<size_t>(8 * j + t)] += a - d;
    }
    for (int j = 0; j < l4; ++j) {
        const double d = w_t[static_cast<size_t>(2 * l8 + j)] / 4.0;
        w[static_cast<size_t>(4 * j)] += d;
        w[static_cast<size_t>(4 * j + 1)] += d;
        w[static_cast<size_t>(4 * j + 2)] -= d;
        w[static_cast<size_t>(4 * j + 3)] -= d;
    }
    for (int j = 0; j < l2; ++j) {
        const double d = w_t[static_cast<size_t>(2 * l8 + l4 + j)] / 2.0;
        w[static_cast<size_t>(2 * j)] += d;
        w[static_cast<size_t>(2 * j + 1)] -= d;
    }
}

void PowerEstimator::update(std::span<const double> u_t) {
    const size_t L = psi.size();
    if (u_t.size() != L) throw std::invalid_argument("PowerEstimator: size mismatch");
    for (size_t i = 0; i < L; ++i) {
        const double x = use_abs ? std::fabs(u_t[i]) : u_t[i] * u_t[i];
        psi[i] = beta * psi[i] + (1.0 - beta) * x;
        if (psi[i] < floor) psi[i] = floor;
    }
}

}  // namespace paf
