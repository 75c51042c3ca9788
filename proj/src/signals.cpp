#include "paf/signals.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace paf {

double sparseness(std::span<const double> h) {
    const double L = static_cast<double>(h.size());
    double l1 = 0.0, l2 = 0.0;
    for (double x : h) {
        l1 += std::fabs(x);
        l2 += x * x;
    }
    if (l2 == 0.0) throw std::invalid_argument("sparseness: zero vector");
    l2 = std::sqrt(l2);
    const double rl = std::sqrt(L);
    return L / (L - rl) * (1.0 - l1 / (rl * l2));
}

namespace {

// Sparseness of `active` taps decaying as exp(-lambda*j) inside a length-L
// vector (positions and signs do not matter).
double sm_of_decay(int taps, int active, double lambda) {
    std::vector<double> h(static_cast<size_t>(taps), 0.0);
    for (int j = 0; j < active; ++j) h[static_cast<size_t>(j)] = std::exp(-lambda * j);
    return sparseness(h);
}

}  // namespace

SystemModel gen_system_tuned(int taps, int active, double target_sm,
                             std::uint64_t seed, const std::string& label) {
    if (taps < 1 || active < 1 || active > taps)
        throw std::invalid_argument("gen_system: bad tap counts");
    // S_m grows monotonically with the decay rate; bracket then bisect.
    double lo = 0.0, hi = 1.0;
    if (sm_of_decay(taps, active, lo) > target_sm)
        throw std::invalid_argument("gen_system: target sparseness below the flat-profile floor");
    while (sm_of_decay(taps, active, hi) < target_sm) {
        hi *= 2.0;
        if (hi > 64.0) throw std::invalid_argument("gen_system: target sparseness unreachable");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sm_of_decay(taps, active, mid) < target_sm) lo = mid; else hi = mid;
    }
    const double lambda = 0.5 * (lo + hi);

    Rng rng(seed);
    const int max_off = taps - active;
    const int off = max_off > 0 ? static_cast<int>(rng.uniform_int(0, max_off)) : 0;
    SystemModel sys;
    sys.h.assign(static_cast<size_t>(taps), 0.0);
    for (int j = 0; j < active; ++j) {
        const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
        sys.h[static_cast<size_t>(off + j)] = sign * std::exp(-lambda * j);
    }
    double l2 = 0.0;
    for (double x : sys.h) l2 += x * x;
    l2 = std::sqrt(l2);
    for (double& x : sys.h) x /= l2;
    sys.label = label;
    sys.s_m = sparseness(sys.h);
    return sys;
}

SystemModel gen_system(int taps, SystemProfile profile, std::uint64_t seed) {
    switch (profile) {
        case SystemProfile::sparse:
            return gen_system_tuned(taps, std::max(1, taps / 8), 0.8960, seed, "sparse");
        case SystemProfile::semi_sparse:
            return gen_system_tuned(taps, std::max(1, (taps * 2) / 5), 0.5560, seed, "semi_sparse");
        case SystemProfile::dispersive:
            return gen_system_tuned(taps, std::max(1, (taps * 4) / 5), 0.3486, seed, "dispersive");
    }
    throw std::invalid_argument("gen_system: unknown profile");
}

SystemModel reference_sparse_system(std::uint64_t seed) {
    return gen_system_tuned(512, 64, 0.8637, seed, "reference_sparse");
}

SystemModel reference_flat_system(std::uint64_t seed) {
    return gen_system_tuned(512, 16, 0.8637, seed, "reference_flat");
}

SystemModel shift_system(const SystemModel& s, int k) {
    const int L = static_cast<int>(s.h.size());
    if (k < 0 || k >= L) throw std::invalid_argument("shift_system: shift out of range");
    SystemModel out;
    out.h.assign(static_cast<size_t>(L), 0.0);
    for (int i = L - 1; i >= k; --i) out.h[static_cast<size_t>(i)] = s.h[static_cast<size_t>(i - k)];
    out.label = s.label + "_shift" + std::to_string(k);
    out.s_m = sparseness(out.h);
    return out;
}

SystemModel load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_system: cannot open " + path);
    SystemModel sys;
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        sys.h.push_back(std::stod(line));
    }
    if (sys.h.empty()) throw std::runtime_error("load_system: no coefficients in " + path);
    sys.label = "file";
    sys.s_m = sparseness(sys.h);
    return sys;
}

// ---------------------------------------------------------------------------
// Sources
// ---------------------------------------------------------------------------

namespace {

class WhiteSource final : public SignalSource {
public:
    WhiteSource(double sigma, std::uint64_t seed) : rng_(seed), sigma_(sigma) {}
    double next() override { return rng_.gaussian(sigma_); }

private:
    Rng rng_;
    double sigma_;
};

// bounded white noise; amplitude set for the requested variance
class UniformSource final : public SignalSource {
public:
    UniformSource(double sigma, std::uint64_t seed)
        : rng_(seed), amp_(sigma * std::sqrt(3.0)) {}
    double next() override { return rng_.uniform(-amp_, amp_); }

private:
    Rng rng_;
    double amp_;
};

class Ar1Source final : public SignalSource {
public:
    Ar1Source(double sigma, double pole, std::uint64_t seed)
        : rng_(seed), pole_(pole), drive_(sigma * std::sqrt(1.0 - pole * pole)) {
        if (std::fabs(pole) >= 1.0) throw std::invalid_argument("ar1: |pole| must be < 1");
        state_ = rng_.gaussian(sigma);  // stationary start
    }
    double next() override {
        state_ = pole_ * state_ + rng_.gaussian(drive_);
        return state_;
    }

private:
    Rng rng_;
    double pole_;
    double drive_;
    double state_;
};

// Stand-in for a speech recording: an AR(1) carrier gated by syllable-rate
// raised-cosine bursts with pseudo-random voicing pauses. 8 kHz timing.
class SpeechLikeSource final : public SignalSource {
public:
    SpeechLikeSource(double rms, std::uint64_t seed)
        : carrier_(1.0, 0.95, seed), gate_rng_(seed ^ 0x5eecull), rms_(rms) {}
    double next() override {
        if (pos_ == 0) voiced_ = gate_rng_.uniform01() < 0.65;
        const double ph = 2.0 * 3.14159265358979323846 * pos_ / kBurst;
        const double env = voiced_ ? 0.5 * (1.0 - std::cos(ph)) : 0.0;
        pos_ = (pos_ + 1) % kBurst;
        // carrier has unit variance; burst duty cycle keeps long-run RMS low
        return rms_ * 1.8 * env * carrier_.next();
    }

private:
    static constexpr int kBurst = 2000;  // 250 ms at 8 kHz
    Ar1Source carrier_;
    Rng gate_rng_;
    double rms_;
    int pos_ = 0;
    bool voiced_ = true;
};

class FileSource final : public SignalSource {
public:
    explicit FileSource(std::vector<double> samples) : samples_(std::move(samples)) {}
    double next() override {
        if (pos_ >= samples_.size()) throw std::runtime_error("file input exhausted");
        return samples_[pos_++];
    }

private:
    std::vector<double> samples_;
    size_t pos_ = 0;
};

std::vector<double> load_text_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<double> v;
    double x;
    while (in >> x) v.push_back(x);
    return v;
}

}  // namespace

std::vector<double> load_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_wav: cannot open " + path);
    auto rd_u32 = [&in]() {
        unsigned char b[4];
        in.read(reinterpret_cast<char*>(b), 4);
        return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    };
    auto rd_u16 = [&in]() {
        unsigned char b[2];
        in.read(reinterpret_cast<char*>(b), 2);
        return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
    };
    char tag[5] = {0};
    in.read(tag, 4);
    if (std::strncmp(tag, "RIFF", 4) != 0) throw std::runtime_error("load_wav: not a RIFF file");
    rd_u32();
    in.read(tag, 4);
    if (std::strncmp(tag, "WAVE", 4) != 0) throw std::runtime_error("load_wav: not a WAVE file");

    std::uint16_t channels = 0, bits = 0;
    bool have_fmt = false;
    std::vector<double> samples;
    while (in.read(tag, 4)) {
        const std::uint32_t sz = rd_u32();
        if (std::strncmp(tag, "fmt ", 4) == 0) {
            const std::uint16_t fmt = rd_u16();
            channels = rd_u16();
            rd_u32();  // sample rate
            rd_u32();  // byte rate
            rd_u16();  // block align
            bits = rd_u16();
            if (sz > 16) in.seekg(sz - 16, std::ios::cur);
            if (fmt != 1 || bits != 16)
                throw std::runtime_error("load_wav: only 16-bit PCM supported");
            if (channels != 1) throw std::runtime_error("load_wav: mono only");
            have_fmt = true;
        } else if (std::strncmp(tag, "data", 4) == 0) {
            if (!have_fmt) throw std::runtime_error("load_wav: data before fmt");
            const std::uint32_t n = sz / 2;
            samples.reserve(n);
            for (std::uint32_t i = 0; i < n; ++i) {
                unsigned char b[2];
                in.read(reinterpret_cast<char*>(b), 2);
                if (!in) throw std::runtime_error("load_wav: truncated data chunk");
                const std::int16_t s = static_cast<std::int16_t>(b[0] | (b[1] << 8));
                samples.push_back(static_cast<double>(s) / 32768.0);
            }
            return samples;
        } else {
            in.seekg(sz + (sz & 1), std::ios::cur);
        }
    }
    throw std::runtime_error("load_wav: no data chunk");
}

std::unique_ptr<SignalSource> make_source(const InputSpec& spec, std::uint64_t seed) {
    const double sigma = std::sqrt(spec.sigma_u2);
    switch (spec.kind) {
        case InputKind::white:
            return std::make_unique<WhiteSource>(sigma, seed);
        case InputKind::uniform:
            return std::make_unique<UniformSource>(sigma, seed);
        case InputKind::ar1:
            return std::make_unique<Ar1Source>(sigma, spec.pole, seed);
        case InputKind::speech_like:
            return std::make_unique<SpeechLikeSource>(sigma, seed);
        case InputKind::file: {
            std::vector<double> v = spec.path.size() > 4 && spec.path.substr(spec.path.size() - 4) == ".wav"
                                        ? load_wav(spec.path)
                                        : load_text_samples(spec.path);
            if (v.empty()) throw std::runtime_error("input file has no samples: " + spec.path);
            return std::make_unique<FileSource>(std::move(v));
        }
    }
    throw std::invalid_argument("make_source: unknown input kind");
}

std::vector<double> gen_input(const InputSpec& spec, std::uint64_t seed, long n) {
    auto src = make_source(spec, seed);
    std::vector<double> out(static_cast<size_t>(n));
    for (auto& x : out) x = src->next();
    return out;
}

double noise_sigma_for_enr(const InputSpec& in, std::span<const double> h, double enr_db,
                           std::uint64_t seed, long n_measure) {
    if (std::isinf(enr_db)) return 0.0;
    const int L = static_cast<int>(h.size());
    double echo_power = 0.0;
    if (in.kind == InputKind::white || in.kind == InputKind::uniform) {
        for (double x : h) echo_power += x * x;
        echo_power *= in.sigma_u2;
    } else if (in.kind == InputKind::ar1) {
        // h' R h with r(k) = sigma^2 pole^|k|
        for (int i = 0; i < L; ++i) {
            double acc = h[static_cast<size_t>(i)];  // k = 0 term
            double pk = 1.0;
            for (int j = i + 1; j < L; ++j) {
                pk *= in.pole;
                acc += 2.0 * pk * h[static_cast<size_t>(j)];
            }
            echo_power += in.sigma_u2 * h[static_cast<size_t>(i)] * acc;
        }
    } else {
        // nonstationary or external input: measure from a dry pass
        auto src = make_source(in, seed);
        std::vector<double> reg(static_cast<size_t>(L), 0.0);
        double acc = 0.0;
        for (long n = 0; n < n_measure; ++n) {
            std::copy_backward(reg.begin(), reg.end() - 1, reg.end());
            reg[0] = src->next();
            double y = 0.0;
            for (int i = 0; i < L; ++i) y += h[static_cast<size_t>(i)] * reg[static_cast<size_t>(i)];
            acc += y * y;
        }
        echo_power = acc / static_cast<double>(n_measure);
    }
    if (echo_power <= 0.0) throw std::invalid_argument("noise_sigma_for_enr: zero echo power");
    return std::sqrt(echo_power * std::pow(10.0, -enr_db / 10.0));
}

std::vector<double> observe(std::span<const double> h, std::span<const double> u,
                            double noise_sigma, std::uint64_t noise_seed) {
    const long N = static_cast<long>(u.size());
    const int L = static_cast<int>(h.size());
    Rng noise(noise_seed);
    std::vector<double> d(static_cast<size_t>(N));
    for (long n = 0; n < N; ++n) {
        double y = 0.0;
        const int kmax = static_cast<int>(std::min<long>(L - 1, n));
        for (int k = 0; k <= kmax; ++k) y += h[static_cast<size_t>(k)] * u[static_cast<size_t>(n - k)];
        d[static_cast<size_t>(n)] = y + (noise_sigma > 0.0 ? noise.gaussian(noise_sigma) : 0.0);
    }
    return d;
}

}  // namespace paf
