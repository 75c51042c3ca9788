#ifndef PAF_SLIDING_HAAR_HPP
#define PAF_SLIDING_HAAR_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

namespace paf {

// Streaming 3-level un-normalized (+/-1) Haar transform of the sliding
// window [x(n), x(n-1), ..., x(n-L+1)]. Band order matches the product
// matrix (T_{L/4} (+) I)(T_{L/2} (+) I) T_L:
//
//   [ A3 (L/8) | D3 (L/8) | D2 (L/4) | D1 (L/2) ]
//
// Between windows two samples apart, every coefficient either shifts one
// slot down its band or is one new pair sum/difference:
//
//   a(n)  = x(n) + x(n-1)          d1(n) = x(n) - x(n-1)
//   b(n)  = a(n) + a(n-2)          d2(n) = a(n) - a(n-2)
//   s3(n) = b(n) + b(n-4)          d3(n) = b(n) - b(n-4)
//
//   D1_j(n) = d1(n-2j)   D2_j(n) = d2(n-4j)
//   D3_j(n) = d3(n-8j)   A3_j(n) = s3(n-8j)
//
// so one pair of "even" / "odd" register files (one per window parity)
// covers all windows: the parity-p file is refreshed every second sample
// and read out when n has parity p. Delay lines hold, per phase, L/2
// first-level differences, L/2-1 second-level differences and L/2-3 values
// for each third-level band, matching the register budget of the
// adders-and-registers datapath this models. All state starts at zero,
// i.e. the pre-history is an implicit zero pad.
//
// T is double for the reference path and a 32-bit integer for the
// fixed-point raw-sample path (exact arithmetic, values grow by at most 8x).
template <typename T>
class SlidingHaar3 {
public:
    explicit SlidingHaar3(int taps) : taps_(taps) {
        if (taps < 8 || taps % 8 != 0)
            throw std::invalid_argument("SlidingHaar3: taps must be a positive multiple of 8");
        for (Phase& p : ph_) {
            p.d1.assign(static_cast<size_t>(taps / 2), T(0));
            p.d2.assign(static_cast<size_t>(taps / 2 - 1), T(0));
            p.d3.assign(static_cast<size_t>(taps / 2 - 3), T(0));
            p.s3.assign(static_cast<size_t>(taps / 2 - 3), T(0));
        }
        out_.assign(static_cast<size_t>(taps), T(0));
    }

    int taps() const { return taps_; }

    // Ingest x(n); afterwards coeffs() is the transform of the new window.
    void push(T x) {
        Phase& p = ph_[n_ & 1];
        const T a = x + prev_;
        const T d1 = x - prev_;
        const T b = a + p.a_prev2;
        const T d2 = a - p.a_prev2;
        const T d3 = b - p.b_prev4;
        const T s3 = b + p.b_prev4;

        shift_in(p.d1, d1);
        shift_in(p.d2, d2);
        shift_in(p.d3, d3);
        shift_in(p.s3, s3);
        p.b_prev4 = p.b_prev2;
        p.b_prev2 = b;
        p.a_prev2 = a;
        prev_ = x;
        ++n_;

        const int l8 = taps_ / 8, l4 = taps_ / 4, l2 = taps_ / 2;
        for (int j = 0; j < l8; ++j) out_[static_cast<size_t>(j)] = p.s3[static_cast<size_t>(4 * j)];
        for (int j = 0; j < l8; ++j) out_[static_cast<size_t>(l8 + j)] = p.d3[static_cast<size_t>(4 * j)];
        for (int j = 0; j < l4; ++j) out_[static_cast<size_t>(2 * l8 + j)] = p.d2[static_cast<size_t>(2 * j)];
        for (int j = 0; j < l2; ++j) out_[static_cast<size_t>(2 * l8 + l4 + j)] = p.d1[static_cast<size_t>(j)];
    }

    std::span<const T> coeffs() const { return out_; }

private:
    struct Phase {
        std::vector<T> d1, d2, d3, s3;  // newest-first, one slot per 2 samples
        T a_prev2 = T(0);
        T b_prev2 = T(0);
        T b_prev4 = T(0);
    };

    static void shift_in(std::vector<T>& line, T v) {
        std::copy_backward(line.begin(), line.end() - 1, line.end());
        line[0] = v;
    }

    int taps_;
    Phase ph_[2];
    T prev_ = T(0);
    unsigned long n_ = 0;
    std::vector<T> out_;
};

}  // namespace paf

#endif
