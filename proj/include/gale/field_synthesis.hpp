// Frozen spatio-temporal realizations of a turbulence spectrum.
//
// A spectrum is spread over propagation angles with a cos^2s directional
// density, discretized on a frequency x angle grid, given counter-based
// random phases, and then sampled as a sum of plane waves
//
//   v(x, y, t) = sum_ij sqrt(2 D(theta_j) S(omega_i) dw dth)
//                * cos(k_i x^w cos(theta_j) + k_i y^w sin(theta_j)
//                      - omega_i t + psi_ij)
//
// with wavenumber k = omega / u_ref and (x^w, y^w) the query point rotated
// into the prevailing-wind frame. Realizations are immutable and safe to
// sample from any number of threads.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gale/spectra.hpp"
#include "gale/units.hpp"

namespace gale::field {

/// cos^2s directional spreading density, normalized to unit integral
/// over theta in [-pi/2, pi/2].
struct SpreadingSpec {
    double exponent = 1.0; ///< s; integer or half-integer, >= 0
    double d0 = 2.0 / 3.14159265358979323846; ///< normalization coefficient

    /// Builds the spec and computes d0 in closed form.
    static SpreadingSpec with_exponent(double s);
};

/// D(theta) = d0 cos^2s(theta) on |theta| <= pi/2, zero outside.
double spreading(double theta, const SpreadingSpec& spec);

/// Two-dimensional spectrum value S(omega) * D(theta).
double directional_spectrum(double psd_value, double theta, const SpreadingSpec& spec);

struct GridSpec {
    int n_freq = 256;
    int m_angle = 37; ///< odd, so theta = 0 is a node
    double omega_min = spectra::kBandMinRad;
    double omega_max = spectra::kBandMaxRad;
    std::uint64_t seed = 0;
};

class FieldRealization {
public:
    /// Assembles a realization from raw discretization arrays.
    /// amplitudes and phases are row-major [n_freq x m_angle].
    FieldRealization(std::vector<double> frequencies,
                     std::vector<double> wavenumbers,
                     std::vector<double> angles,
                     std::vector<double> amplitudes,
                     std::vector<double> phases,
                     double theta_w, double u_ref);

    /// Scalar turbulence value at position p (m) and time t (s).
    /// The altitude coordinate does not enter the phase; the field is 2D.
    double sample(const Vec3& p, double t) const;

    std::span<const double> frequencies() const { return freq_; }
    std::span<const double> wavenumbers() const { return wavenumber_; }
    std::span<const double> angles() const { return angle_; }
    std::span<const double> amplitudes() const { return amplitude_; }
    std::span<const double> phases() const { return phase_; }
    double theta_w() const { return theta_w_; }
    double u_ref() const { return u_ref_; }
    int n_freq() const { return static_cast<int>(freq_.size()); }
    int m_angle() const { return static_cast<int>(angle_.size()); }

private:
    std::vector<double> freq_;       // omega_i [rad/s]
    std::vector<double> wavenumber_; // k_i = omega_i / u_ref [rad/m]
    std::vector<double> angle_;      // theta_j [rad]
    std::vector<double> cos_angle_;
    std::vector<double> sin_angle_;
    std::vector<double> amplitude_;  // a_ij [m/s], row-major
    std::vector<double> phase_;      // psi_ij in [0, 2pi), row-major
    double theta_w_;
    double cos_w_;
    double sin_w_;
    double u_ref_;
};

/// Deterministic realization of the given spectrum. Phases are drawn from a
/// counter-based generator keyed by (grid.seed, phase_stream, i, j); fields
/// built with the same key share their phase sequence.
FieldRealization build_field(const spectra::SpectrumModel& model,
                             const GridSpec& grid,
                             const SpreadingSpec& spread,
                             double theta_w, double u_ref,
                             std::uint32_t phase_stream = 0);

/// Free-function spelling of FieldRealization::sample.
double sample_scalar(const FieldRealization& field, const Vec3& p, double t);

/// Unidirectional series y(t) = sum_i sqrt(2 S(omega_i) dw) cos(omega_i t + psi_i)
/// on a uniform bin-center frequency grid over [omega_min, omega_max].
std::vector<double> synthesize_timeseries(const spectra::SpectrumModel& model,
                                          std::span<const double> t_grid,
                                          int n_freq, std::uint64_t seed,
                                          double omega_min = spectra::kBandMinRad,
                                          double omega_max = spectra::kBandMaxRad);

/// Same synthesis from an arbitrary PSD evaluator.
std::vector<double> synthesize_timeseries(const std::function<double(double)>& psd,
                                          std::span<const double> t_grid,
                                          int n_freq, std::uint64_t seed,
                                          double omega_min = spectra::kBandMinRad,
                                          double omega_max = spectra::kBandMaxRad);

} // namespace gale::field
