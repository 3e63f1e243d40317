// Turbulence power spectral densities.
//
// Over-land: the six low-altitude Von Karman forms (longitudinal, lateral,
// vertical, roll, pitch, yaw). Over-water: Harris, Forristall, and Ochi-Shin.
//
// Canonical frequency variable is omega in rad/s and all evaluations return
// one-sided PSD per (rad/s); the Hz-parameterized over-water families are
// converted internally via S_omega = S_f / 2pi at f = omega / 2pi.
//
// Unit policy: construction helpers take SI; the Von Karman forms are
// evaluated internally in imperial units (ft, ft/s) exactly as tabulated,
// with translational results converted back to m^2/s.
#pragma once

#include <variant>

#include "gale/units.hpp"

namespace gale::spectra {

/// Validated evaluation band: f in [0.01, 8] Hz.
inline constexpr double kBandMinRad = 2.0 * 3.14159265358979323846 * 0.01;
inline constexpr double kBandMaxRad = 2.0 * 3.14159265358979323846 * 8.0;

inline bool in_validated_band(double omega) {
    return omega >= kBandMinRad && omega <= kBandMaxRad;
}

enum class Family {
    VkLongitudinal,
    VkLateral,
    VkVertical,
    VkRoll,
    VkPitch,
    VkYaw,
    Harris,
    Forristall,
    OchiShin,
};

/// Wind vector / rate component labels shared with the field and engine layers.
enum class Component { Longitudinal, Lateral, Vertical, Roll, Pitch, Yaw };

/// Low-altitude Von Karman conditions. Stored in the imperial units the
/// tabulated forms are written in; use from_si for SI construction.
struct VonKarmanParams {
    double u20; ///< mean wind speed at 20 ft altitude [ft/s]
    double z;   ///< altitude [ft], 0 < z < 2000
    double b;   ///< wingspan [ft]

    static VonKarmanParams from_si(double u20_mps, double z_m, double b_m);
    void validate() const;
};

struct VkScalingLengths {
    double l_u, l_v, l_w; ///< [ft]
};

struct VkIntensities {
    double sigma_u, sigma_v, sigma_w; ///< [ft/s]
};

struct HarrisParams {
    double u10;              ///< mean wind speed at 10 m [m/s]
    double length_scale = 60.0;      ///< L [m]
    double drag_coefficient = 0.002; ///< C, 0.002 "rough" / 0.0015 "moderate"

    void validate() const;
    /// Advisory range for the scaling length; values outside are accepted.
    bool length_in_usual_range() const {
        return length_scale >= 50.0 && length_scale <= 400.0;
    }
};

struct ForristallParams {
    double a_f = 42.0; ///< experimental fit constant
    double b_f = 63.0; ///< experimental fit constant
    double z;          ///< altitude [m]
    double u_z;        ///< mean wind speed at z [m/s]
    double u_star;     ///< friction velocity [m/s]

    void validate() const;
};

struct OchiShinParams {
    double z;      ///< altitude [m]
    double u_z;    ///< mean wind speed at z [m/s]
    double u_star; ///< friction velocity [m/s]

    void validate() const;
};

/// One-sided PSD evaluator: a model family, its parameters, a scalar gain,
/// and (for Ochi-Shin) an optional per-frequency Von Karman component ratio
/// so the single over-water PSD can stand in for all six wind components.
struct SpectrumModel {
    Family family;
    std::variant<VonKarmanParams, HarrisParams, ForristallParams, OchiShinParams> params;
    double scale = 1.0;

    /// When != Longitudinal (Ochi-Shin only): multiply by
    /// Phi_component(omega) / Phi_u(omega) of the matched Von Karman model.
    Component os_component = Component::Longitudinal;
    VonKarmanParams ratio_conditions{};

    static SpectrumModel von_karman(Family f, const VonKarmanParams& p);
    static SpectrumModel harris(const HarrisParams& p);
    static SpectrumModel forristall(const ForristallParams& p);
    static SpectrumModel ochi_shin(const OchiShinParams& p);
    /// Ochi-Shin scaled onto another wind component via the Von Karman ratio
    /// evaluated at the given matched conditions.
    static SpectrumModel ochi_shin_component(Component c, const OchiShinParams& p,
                                             const VonKarmanParams& matched);
};

/// Von Karman low-altitude scaling lengths at altitude z [ft].
VkScalingLengths vk_scaling_lengths(double z_ft);

/// Von Karman low-altitude RMS intensities for u20 [ft/s] at altitude z [ft].
VkIntensities vk_intensities(double u20_fps, double z_ft);

/// One-sided PSD value per (rad/s). Translational components are in m^2/s
/// ((m/s)^2 per rad/s); rotational components are in 1/s.
double eval_psd(const SpectrumModel& model, double omega);

/// Same model evaluated in per-Hz form at frequency f [Hz].
double eval_psd_per_hz(const SpectrumModel& model, double f_hz);

/// Ratio Phi_component(omega) / Phi_u(omega) of the Von Karman model with
/// conditions given in SI (mean wind [m/s], altitude [m], wingspan [m]).
/// Longitudinal returns 1.
double os_component_ratio(Component component, double v_air_mps, double z_m,
                          double b_m, double omega);

} // namespace gale::spectra
