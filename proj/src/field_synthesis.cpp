#include "gale/field_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "gale/errors.hpp"
#include "gale/rng.hpp"

namespace gale::field {

namespace {

constexpr double kPi = std::numbers::pi;

void check_grid(const GridSpec& grid) {
    if (grid.n_freq < 1 || grid.m_angle < 1) {
        throw ConfigError("grid needs at least one frequency and one angle");
    }
    if (grid.m_angle % 2 == 0) {
        throw ConfigError("m_angle must be odd so theta = 0 is a node");
    }
    if (!(grid.omega_min > 0.0) || !(grid.omega_max > grid.omega_min)) {
        throw ConfigError("frequency band must satisfy 0 < omega_min < omega_max");
    }
}

} // namespace

SpreadingSpec SpreadingSpec::with_exponent(double s) {
    if (!(s >= 0.0)) {
        throw ConfigError("spreading exponent must be non-negative");
    }
    const double doubled = 2.0 * s;
    const long n = std::lround(doubled);
    if (std::abs(doubled - static_cast<double>(n)) > 1e-9) {
        throw ConfigError("spreading exponent must be an integer or half-integer");
    }

    // I_n = integral of cos^n over [-pi/2, pi/2] by the reduction formula
    // I_n = I_{n-2} (n-1)/n, with I_0 = pi and I_1 = 2.
    double integral = (n % 2 == 0) ? kPi : 2.0;
    for (long k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) {
        integral *= static_cast<double>(k - 1) / static_cast<double>(k);
    }

    SpreadingSpec spec;
    spec.exponent = s;
    spec.d0 = 1.0 / integral;
    return spec;
}

double spreading(double theta, const SpreadingSpec& spec) {
    if (theta < -kPi / 2.0 || theta > kPi / 2.0) {
        return 0.0;
    }
    return spec.d0 * std::pow(std::cos(theta) * std::cos(theta), spec.exponent);
}

double directional_spectrum(double psd_value, double theta, const SpreadingSpec& spec) {
    if (psd_value < 0.0) {
        throw DomainError("PSD value must be non-negative");
    }
    return psd_value * spreading(theta, spec);
}

FieldRealization::FieldRealization(std::vector<double> frequencies,
                                   std::vector<double> wavenumbers,
                                   std::vector<double> angles,
                                   std::vector<double> amplitudes,
                                   std::vector<double> phases,
                                   double theta_w, double u_ref)
    : freq_(std::move(frequencies)),
      wavenumber_(std::move(wavenumbers)),
      angle_(std::move(angles)),
      amplitude_(std::move(amplitudes)),
      phase_(std::move(phases)),
      theta_w_(theta_w),
      cos_w_(std::cos(theta_w)),
      sin_w_(std::sin(theta_w)),
      u_ref_(u_ref) {
    const std::size_t n = freq_.size();
    const std::size_t m = angle_.size();
    if (n == 0 || m == 0) {
        throw ConfigError("field realization needs a non-empty grid");
    }
    if (wavenumber_.size() != n || amplitude_.size() != n * m ||
        phase_.size() != n * m) {
        throw ConfigError("field realization arrays have mismatched sizes");
    }
    cos_angle_.resize(m);
    sin_angle_.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        cos_angle_[j] = std::cos(angle_[j]);
        sin_angle_[j] = std::sin(angle_[j]);
    }
}

double FieldRealization::sample(const Vec3& p, double t) const {
    // Rotate the query point into the wind frame; z does not enter.
    const double xw = p[0] * cos_w_ + p[1] * sin_w_;
    const double yw = -p[0] * sin_w_ + p[1] * cos_w_;

    const std::size_t n = freq_.size();
    const std::size_t m = angle_.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double kxw = wavenumber_[i] * xw;
        const double kyw = wavenumber_[i] * yw;
        const double wt = freq_[i] * t;
        const double* amp = amplitude_.data() + i * m;
        const double* psi = phase_.data() + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            if (amp[j] == 0.0) {
                continue;
            }
            acc += amp[j] * std::cos(kxw * cos_angle_[j] + kyw * sin_angle_[j] -
                                     wt + psi[j]);
        }
    }
    return acc;
}

FieldRealization build_field(const spectra::SpectrumModel& model,
                             const GridSpec& grid,
                             const SpreadingSpec& spread,
                             double theta_w, double u_ref,
                             std::uint32_t phase_stream) {
    check_grid(grid);
    if (!(u_ref > 0.0)) {
        throw ConfigError("reference mean wind must be positive");
    }

    const int n = grid.n_freq;
    const int m = grid.m_angle;
    const double d_omega = (grid.omega_max - grid.omega_min) / n;
    const double d_theta = kPi / m;

    std::vector<double> freq(n), wavenumber(n), angle(m);
    for (int i = 0; i < n; ++i) {
        freq[i] = grid.omega_min + (i + 0.5) * d_omega;
        wavenumber[i] = freq[i] / u_ref;
    }
    for (int j = 0; j < m; ++j) {
        angle[j] = -kPi / 2.0 + (j + 0.5) * d_theta;
    }

    std::vector<double> amplitude(static_cast<std::size_t>(n) * m);
    std::vector<double> phase(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        const double s_i = spectra::eval_psd(model, freq[i]);
        for (int j = 0; j < m; ++j) {
            const double s2d = directional_spectrum(s_i, angle[j], spread);
            amplitude[static_cast<std::size_t>(i) * m + j] =
                std::sqrt(2.0 * s2d * d_omega * d_theta);
            phase[static_cast<std::size_t>(i) * m + j] =
                rng::phase(grid.seed, phase_stream, static_cast<std::uint64_t>(i),
                           static_cast<std::uint64_t>(j));
        }
    }

    return FieldRealization(std::move(freq), std::move(wavenumber),
                            std::move(angle), std::move(amplitude),
                            std::move(phase), theta_w, u_ref);
}

double sample_scalar(const FieldRealization& field, const Vec3& p, double t) {
    return field.sample(p, t);
}

std::vector<double> synthesize_timeseries(const std::function<double(double)>& psd,
                                          std::span<const double> t_grid,
                                          int n_freq, std::uint64_t seed,
                                          double omega_min, double omega_max) {
    if (n_freq < 1) {
        throw ConfigError("n_freq must be at least 1");
    }
    if (!(omega_min > 0.0) || !(omega_max > omega_min)) {
        throw ConfigError("frequency band must satisfy 0 < omega_min < omega_max");
    }
    if (!std::is_sorted(t_grid.begin(), t_grid.end())) {
        throw DomainError("time grid must be sorted");
    }

    const double d_omega = (omega_max - omega_min) / n_freq;
    std::vector<double> omega(n_freq), amp(n_freq), psi(n_freq);
    for (int i = 0; i < n_freq; ++i) {
        omega[i] = omega_min + (i + 0.5) * d_omega;
        amp[i] = std::sqrt(2.0 * psd(omega[i]) * d_omega);
        psi[i] = rng::phase(seed, 0, static_cast<std::uint64_t>(i), 0);
    }

    std::vector<double> out(t_grid.size());
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        double acc = 0.0;
        for (int i = 0; i < n_freq; ++i) {
            acc += amp[i] * std::cos(omega[i] * t_grid[k] + psi[i]);
        }
        out[k] = acc;
    }
    return out;
}

std::vector<double> synthesize_timeseries(const spectra::SpectrumModel& model,
                                          std::span<const double> t_grid,
                                          int n_freq, std::uint64_t seed,
                                          double omega_min, double omega_max) {
    return synthesize_timeseries(
        [&model](double w) { return spectra::eval_psd(model, w); }, t_grid,
        n_freq, seed, omega_min, omega_max);
}

} // namespace gale::field
