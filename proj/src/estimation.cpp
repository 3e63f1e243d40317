#include "gale/estimation.hpp"

#include <cmath>
#include <numbers>

#include "gale/errors.hpp"

namespace gale::estimation {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

void fft_radix2(std::vector<std::complex<double>>& data) {
    const std::size_t n = data.size();
    if (!is_pow2(n)) {
        throw ConfigError("FFT size must be a power of two");
    }

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

double PsdEstimate::band_power(double f_lo, double f_hi) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < freq_hz.size(); ++k) {
        if (freq_hz[k] >= f_lo && freq_hz[k] <= f_hi) {
            acc += psd[k] * df_hz;
        }
    }
    return acc;
}

PsdEstimate welch_psd(std::span<const double> x, double sample_rate_hz,
                      std::size_t segment, double overlap) {
    if (!is_pow2(segment)) {
        throw ConfigError("Welch segment length must be a power of two");
    }
    if (x.size() < segment) {
        throw ConfigError("series shorter than one Welch segment");
    }
    if (!(sample_rate_hz > 0.0)) {
        throw ConfigError("sample rate must be positive");
    }
    if (overlap < 0.0 || overlap >= 1.0) {
        throw ConfigError("overlap must lie in [0, 1)");
    }

    const std::size_t hop =
        std::max<std::size_t>(1, static_cast<std::size_t>(
                                     std::floor(segment * (1.0 - overlap))));
    const std::size_t n_seg = (x.size() - segment) / hop + 1;

    // periodic Hann window
    std::vector<double> window(segment);
    double window_power = 0.0;
    for (std::size_t i = 0; i < segment; ++i) {
        window[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / segment));
        window_power += window[i] * window[i];
    }

    const std::size_t n_bins = segment / 2 + 1;
    PsdEstimate est;
    est.df_hz = sample_rate_hz / static_cast<double>(segment);
    est.freq_hz.resize(n_bins);
    est.psd.assign(n_bins, 0.0);
    for (std::size_t k = 0; k < n_bins; ++k) {
        est.freq_hz[k] = est.df_hz * static_cast<double>(k);
    }

    std::vector<std::complex<double>> buf(segment);
    for (std::size_t s = 0; s < n_seg; ++s) {
        const double* seg = x.data() + s * hop;
        double mean = 0.0;
        for (std::size_t i = 0; i < segment; ++i) {
            mean += seg[i];
        }
        mean /= static_cast<double>(segment);
        for (std::size_t i = 0; i < segment; ++i) {
            buf[i] = {(seg[i] - mean) * window[i], 0.0};
        }
        fft_radix2(buf);
        for (std::size_t k = 0; k < n_bins; ++k) {
            est.psd[k] += std::norm(buf[k]);
        }
    }

    const double scale = 1.0 / (sample_rate_hz * window_power *
                                static_cast<double>(n_seg));
    for (std::size_t k = 0; k < n_bins; ++k) {
        const bool edge = (k == 0) || (k == n_bins - 1 && segment % 2 == 0);
        est.psd[k] *= scale * (edge ? 1.0 : 2.0);
    }
    return est;
}

} // namespace gale::estimation
