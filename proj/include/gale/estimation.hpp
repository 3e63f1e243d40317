// Spectral density estimation from sampled series: Hann-windowed, overlapped,
// averaged periodograms (Welch's method) over a radix-2 FFT.
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gale::estimation {

/// In-place iterative radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);

/// One-sided PSD estimate in per-Hz units on a uniform frequency grid.
struct PsdEstimate {
    double df_hz = 0.0;
    std::vector<double> freq_hz;
    std::vector<double> psd; ///< [x^2 / Hz]

    /// Trapezoid-free band power: sum of psd * df over bins inside [f_lo, f_hi].
    double band_power(double f_lo, double f_hi) const;
};

/// Welch estimate with Hann window and per-segment mean removal.
/// segment must be a power of two; overlap is the segment fraction shared by
/// consecutive segments (0 <= overlap < 1).
PsdEstimate welch_psd(std::span<const double> x, double sample_rate_hz,
                      std::size_t segment, double overlap = 0.5);

} // namespace gale::estimation
