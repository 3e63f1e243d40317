#include "gale/spectra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gale/errors.hpp"

namespace gale::spectra {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        throw DomainError(std::string(name) + " must be positive");
    }
}

// (0.177 + 0.000823 z) appears in both the length and intensity scalings.
double vk_denominator(double z_ft) { return 0.177 + 0.000823 * z_ft; }

// --- Von Karman spectral densities, imperial units, omega in rad/s ---------

double vk_phi_u(const VonKarmanParams& p, double omega) {
    const VkScalingLengths l = vk_scaling_lengths(p.z);
    const VkIntensities s = vk_intensities(p.u20, p.z);
    const double x = 1.339 * l.l_u * omega / p.u20;
    return 2.0 * s.sigma_u * s.sigma_u * l.l_u / (kPi * p.u20) /
           std::pow(1.0 + x * x, 5.0 / 6.0);
}

double vk_phi_transverse(double sigma, double length, double u20, double omega) {
    const double x2 = std::pow(1.339 * length * omega / u20, 2);
    return sigma * sigma * length / (kPi * u20) * (1.0 + (8.0 / 3.0) * x2) /
           std::pow(1.0 + x2, 11.0 / 6.0);
}

double vk_phi_v(const VonKarmanParams& p, double omega) {
    const VkScalingLengths l = vk_scaling_lengths(p.z);
    const VkIntensities s = vk_intensities(p.u20, p.z);
    return vk_phi_transverse(s.sigma_v, l.l_v, p.u20, omega);
}

double vk_phi_w(const VonKarmanParams& p, double omega) {
    const VkScalingLengths l = vk_scaling_lengths(p.z);
    const VkIntensities s = vk_intensities(p.u20, p.z);
    return vk_phi_transverse(s.sigma_w, l.l_w, p.u20, omega);
}

double vk_phi_p(const VonKarmanParams& p, double omega) {
    const VkScalingLengths l = vk_scaling_lengths(p.z);
    const VkIntensities s = vk_intensities(p.u20, p.z);
    const double x = 4.0 * p.b * omega / (kPi * p.u20);
    return s.sigma_w * s.sigma_w / (l.l_w * p.u20) * 0.8 *
           std::cbrt(kPi * l.l_w / (4.0 * p.b)) / (1.0 + x * x);
}

// The tabulated pitch/yaw forms carry a +- sign; the + branch is used so the
// PSD stays non-negative.
double vk_phi_q(const VonKarmanParams& p, double omega) {
    const double r = omega / p.u20;
    const double x = 4.0 * p.b * omega / (kPi * p.u20);
    return r * r / (1.0 + x * x) * vk_phi_w(p, omega);
}

double vk_phi_r(const VonKarmanParams& p, double omega) {
    const double r = omega / p.u20;
    const double x = 3.0 * p.b * omega / (kPi * p.u20);
    return r * r / (1.0 + x * x) * vk_phi_v(p, omega);
}

double vk_phi(Component c, const VonKarmanParams& p, double omega) {
    switch (c) {
    case Component::Longitudinal: return vk_phi_u(p, omega);
    case Component::Lateral: return vk_phi_v(p, omega);
    case Component::Vertical: return vk_phi_w(p, omega);
    case Component::Roll: return vk_phi_p(p, omega);
    case Component::Pitch: return vk_phi_q(p, omega);
    case Component::Yaw: return vk_phi_r(p, omega);
    }
    throw DomainError("unknown component");
}

Component vk_component(Family f) {
    switch (f) {
    case Family::VkLongitudinal: return Component::Longitudinal;
    case Family::VkLateral: return Component::Lateral;
    case Family::VkVertical: return Component::Vertical;
    case Family::VkRoll: return Component::Roll;
    case Family::VkPitch: return Component::Pitch;
    case Family::VkYaw: return Component::Yaw;
    default: throw DomainError("not a Von Karman family");
    }
}

// --- Over-water spectral densities, per-Hz, f in Hz ------------------------

double harris_per_hz(const HarrisParams& p, double f) {
    p.validate();
    const double fs = f * p.length_scale / p.u10;
    return 4.0 * p.drag_coefficient * p.u10 * p.u10 * fs /
           (f * std::pow(2.0 + fs * fs, 5.0 / 6.0));
}

double forristall_per_hz(const ForristallParams& p, double f) {
    p.validate();
    const double fs = f * p.z / p.u_z;
    const double sigma = 1.92 * p.u_star;
    return p.a_f * fs * sigma * sigma /
           (f * std::pow(1.0 + p.b_f * fs, 5.0 / 3.0));
}

// Non-dimensional Ochi-Shin PSD, piecewise in the non-dimensional frequency.
double ochi_shin_star(double fs) {
    if (fs <= 0.003) {
        return 583.0 * fs;
    }
    if (fs <= 0.1) {
        return 420.0 * std::pow(fs, 0.7) /
               std::pow(1.0 + std::pow(fs, 0.35), 11.5);
    }
    return 838.0 * fs / std::pow(1.0 + std::pow(fs, 0.3), 11.5);
}

double ochi_shin_per_hz(const OchiShinParams& p, double f) {
    p.validate();
    const double fs = f * p.z / p.u_z;
    return ochi_shin_star(fs) * p.u_star * p.u_star / f;
}

} // namespace

// --- parameter validation ---------------------------------------------------

VonKarmanParams VonKarmanParams::from_si(double u20_mps, double z_m, double b_m) {
    VonKarmanParams p{u20_mps * kFeetPerMeter, z_m * kFeetPerMeter,
                      b_m * kFeetPerMeter};
    p.validate();
    return p;
}

void VonKarmanParams::validate() const {
    require_positive(u20, "u20");
    require_positive(z, "z");
    require_positive(b, "b");
    if (!(z < 2000.0)) {
        throw DomainError("z must be below 2000 ft (low-altitude model)");
    }
}

void HarrisParams::validate() const {
    require_positive(u10, "u10");
    require_positive(length_scale, "length_scale");
    require_positive(drag_coefficient, "drag_coefficient");
}

void ForristallParams::validate() const {
    require_positive(a_f, "a_f");
    require_positive(b_f, "b_f");
    require_positive(z, "z");
    require_positive(u_z, "u_z");
    if (!(u_star > 0.0)) {
        throw ConfigError("over-water spectrum requires a positive friction velocity");
    }
}

void OchiShinParams::validate() const {
    require_positive(z, "z");
    require_positive(u_z, "u_z");
    if (!(u_star > 0.0)) {
        throw ConfigError("over-water spectrum requires a positive friction velocity");
    }
}

// --- model factories ---------------------------------------------------------

SpectrumModel SpectrumModel::von_karman(Family f, const VonKarmanParams& p) {
    vk_component(f); // rejects non-VK families
    p.validate();
    return SpectrumModel{f, p};
}

SpectrumModel SpectrumModel::harris(const HarrisParams& p) {
    p.validate();
    return SpectrumModel{Family::Harris, p};
}

SpectrumModel SpectrumModel::forristall(const ForristallParams& p) {
    p.validate();
    return SpectrumModel{Family::Forristall, p};
}

SpectrumModel SpectrumModel::ochi_shin(const OchiShinParams& p) {
    p.validate();
    return SpectrumModel{Family::OchiShin, p};
}

SpectrumModel SpectrumModel::ochi_shin_component(Component c, const OchiShinParams& p,
                                                 const VonKarmanParams& matched) {
    p.validate();
    matched.validate();
    SpectrumModel m{Family::OchiShin, p};
    m.os_component = c;
    m.ratio_conditions = matched;
    return m;
}

// --- operations ---------------------------------------------------------------

VkScalingLengths vk_scaling_lengths(double z_ft) {
    require_positive(z_ft, "z");
    const double l_u = z_ft / std::pow(vk_denominator(z_ft), 1.2);
    return {l_u, l_u, z_ft};
}

VkIntensities vk_intensities(double u20_fps, double z_ft) {
    require_positive(u20_fps, "u20");
    require_positive(z_ft, "z");
    const double sigma_w = 0.1 * u20_fps;
    const double sigma_u = sigma_w / std::pow(vk_denominator(z_ft), 0.4);
    return {sigma_u, sigma_u, sigma_w};
}

double eval_psd(const SpectrumModel& model, double omega) {
    if (!(omega > 0.0)) {
        throw DomainError("omega must be positive");
    }
    if (!(model.scale >= 0.0)) {
        throw ConfigError("spectrum scale must be non-negative");
    }

    double value = 0.0;
    switch (model.family) {
    case Family::VkLongitudinal:
    case Family::VkLateral:
    case Family::VkVertical: {
        const auto& p = std::get<VonKarmanParams>(model.params);
        p.validate();
        // ft^2/s -> m^2/s
        value = vk_phi(vk_component(model.family), p, omega) /
                (kFeetPerMeter * kFeetPerMeter);
        break;
    }
    case Family::VkRoll:
    case Family::VkPitch:
    case Family::VkYaw: {
        const auto& p = std::get<VonKarmanParams>(model.params);
        p.validate();
        // rad^2/s^2 per rad/s is unit-system independent
        value = vk_phi(vk_component(model.family), p, omega);
        break;
    }
    case Family::Harris:
        value = harris_per_hz(std::get<HarrisParams>(model.params), omega / kTwoPi) / kTwoPi;
        break;
    case Family::Forristall:
        value = forristall_per_hz(std::get<ForristallParams>(model.params), omega / kTwoPi) / kTwoPi;
        break;
    case Family::OchiShin:
        value = ochi_shin_per_hz(std::get<OchiShinParams>(model.params), omega / kTwoPi) / kTwoPi;
        if (model.os_component != Component::Longitudinal) {
            const auto& c = model.ratio_conditions;
            value *= vk_phi(model.os_component, c, omega) / vk_phi_u(c, omega);
        }
        break;
    }
    return model.scale * value;
}

double eval_psd_per_hz(const SpectrumModel& model, double f_hz) {
    if (!(f_hz > 0.0)) {
        throw DomainError("frequency must be positive");
    }
    switch (model.family) {
    case Family::Harris:
        return model.scale * harris_per_hz(std::get<HarrisParams>(model.params), f_hz);
    case Family::Forristall:
        return model.scale * forristall_per_hz(std::get<ForristallParams>(model.params), f_hz);
    case Family::OchiShin: {
        double value = ochi_shin_per_hz(std::get<OchiShinParams>(model.params), f_hz);
        if (model.os_component != Component::Longitudinal) {
            const auto& c = model.ratio_conditions;
            const double omega = kTwoPi * f_hz;
            value *= vk_phi(model.os_component, c, omega) / vk_phi_u(c, omega);
        }
        return model.scale * value;
    }
    default:
        return eval_psd(model, kTwoPi * f_hz) * kTwoPi;
    }
}

double os_component_ratio(Component component, double v_air_mps, double z_m,
                          double b_m, double omega) {
    if (!(omega > 0.0)) {
        throw DomainError("omega must be positive");
    }
    if (component == Component::Longitudinal) {
        return 1.0;
    }
    const VonKarmanParams p = VonKarmanParams::from_si(v_air_mps, z_m, b_m);
    // Phi_u is strictly positive on the domain, so the quotient is well defined.
    return vk_phi(component, p, omega) / vk_phi_u(p, omega);
}

} // namespace gale::spectra
