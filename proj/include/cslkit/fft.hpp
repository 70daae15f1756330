#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "cslkit/constants.hpp"
#include "cslkit/errors.hpp"

namespace cslkit {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place iterative radix-2 Cooley-Tukey FFT, forward sign e^{-i2pi/n}.
inline void fft_inplace(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    require(is_power_of_two(n), "fft: length must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * kPi / double(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto u = a[i + j];
                const auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

/// Forward DFT of a real sequence of even length n via one complex FFT of
/// length n/2. Returns bins 0..n/2 inclusive.
inline std::vector<std::complex<double>> rfft(const double* x, std::size_t n) {
    require(is_power_of_two(n) && n >= 2, "rfft: length must be a power of two");
    const std::size_t h = n / 2;
    std::vector<std::complex<double>> z(h);
    for (std::size_t i = 0; i < h; ++i) z[i] = {x[2 * i], x[2 * i + 1]};
    fft_inplace(z);
    std::vector<std::complex<double>> out(h + 1);
    const std::complex<double> zi(0.0, 1.0);
    out[0] = {z[0].real() + z[0].imag(), 0.0};
    out[h] = {z[0].real() - z[0].imag(), 0.0};
    for (std::size_t k = 1; k < h; ++k) {
        const auto zk = z[k];
        const auto znk = std::conj(z[h - k]);
        const auto even = 0.5 * (zk + znk);
        const auto odd = -0.5 * zi * (zk - znk);
        const double ang = -2.0 * kPi * double(k) / double(n);
        out[k] = even + std::complex<double>(std::cos(ang), std::sin(ang)) * odd;
    }
    return out;
}

} // namespace cslkit
