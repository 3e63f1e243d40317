#include "gale/wind_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "gale/errors.hpp"
#include "gale/field_synthesis.hpp"
#include "gale/rng.hpp"

namespace gale::engine {

namespace {

constexpr double kPi = std::numbers::pi;

// Altitude window used when evaluating spectra for a query point. Queries
// outside are evaluated at the nearest edge; the low-altitude forms are not
// valid above 2000 ft and degenerate at the surface.
constexpr double kMinEvalAltitude = 0.5;   // m
constexpr double kMaxEvalAltitude = 600.0; // m

constexpr spectra::Component kComponents[6] = {
    spectra::Component::Longitudinal, spectra::Component::Lateral,
    spectra::Component::Vertical,     spectra::Component::Roll,
    spectra::Component::Pitch,        spectra::Component::Yaw,
};

// Correlated pairs share a phase stream: pitch with vertical, yaw with lateral.
constexpr int kPhaseStream[6] = {0, 1, 2, 3, 2, 1};

spectra::Family vk_family(spectra::Component c) {
    switch (c) {
    case spectra::Component::Longitudinal: return spectra::Family::VkLongitudinal;
    case spectra::Component::Lateral: return spectra::Family::VkLateral;
    case spectra::Component::Vertical: return spectra::Family::VkVertical;
    case spectra::Component::Roll: return spectra::Family::VkRoll;
    case spectra::Component::Pitch: return spectra::Family::VkPitch;
    case spectra::Component::Yaw: return spectra::Family::VkYaw;
    }
    throw DomainError("unknown component");
}

double clamp_altitude(double z) {
    if (z < kMinEvalAltitude) {
        return kMinEvalAltitude;
    }
    if (z > kMaxEvalAltitude) {
        return kMaxEvalAltitude;
    }
    return z;
}

} // namespace

Vec3 assemble_velocity(double v_lon, double v_lat, double v_vert, double theta_w) {
    const double c = std::cos(theta_w);
    const double s = std::sin(theta_w);
    return {v_lon * c - v_lat * s, v_lon * s + v_lat * c, v_vert};
}

WindEngine WindEngine::build(const EnvironmentConfig& cfg) {
    if (cfg.v_air < 0.0) {
        throw ConfigError("mean wind speed must be non-negative");
    }
    if (cfg.theta_w < 0.0 || cfg.theta_w >= 2.0 * kPi) {
        throw ConfigError("theta_w must lie in [0, 2pi)");
    }
    if (!(cfg.wingspan > 0.0)) {
        throw ConfigError("wingspan must be positive");
    }
    if (!(cfg.f_min_hz > 0.0) || !(cfg.f_max_hz > cfg.f_min_hz)) {
        throw ConfigError("frequency band must satisfy 0 < f_min < f_max");
    }
    if (cfg.terrain == Terrain::OverWater && !(cfg.v_air > 0.0)) {
        throw ConfigError("over-water terrain requires a positive mean wind");
    }
    if (cfg.gust.enable && cfg.gust.rate_per_hour > 0.0 && !(cfg.v_air > 0.0)) {
        throw ConfigError("gusts require a positive mean wind to propagate");
    }

    WindEngine e;
    e.cfg_ = cfg;
    e.cos_w_ = std::cos(cfg.theta_w);
    e.sin_w_ = std::sin(cfg.theta_w);

    const double z_ref = cfg.effective_z_ref();
    const double z20 = 20.0 / kFeetPerMeter;

    if (cfg.terrain == Terrain::OverWater) {
        if (!(cfg.c_p_ratio > 0.0)) {
            throw ConfigError("c_p ratio must be positive");
        }
        if (!(z_ref > 0.0)) {
            throw ConfigError("z_ref must be positive");
        }
        // Solve at 10 m; when v_air is referenced elsewhere, anchor the log
        // profile there and re-solve until u10 is consistent.
        double u10 = cfg.v_air;
        boundary_layer::SeaStateSolution sol{};
        for (int pass = 0; pass < 8; ++pass) {
            sol = boundary_layer::solve_friction_velocity(
                {u10, cfg.c_p_ratio * u10, cfg.closure});
            if (std::abs(z_ref - 10.0) < 1e-12) {
                break;
            }
            if (!(z_ref > sol.z0)) {
                throw ConfigError("z_ref must exceed the sea roughness length");
            }
            const double next =
                cfg.v_air * std::log(10.0 / sol.z0) / std::log(z_ref / sol.z0);
            if (std::abs(next - u10) <= 1e-6) {
                u10 = next;
                break;
            }
            u10 = next;
        }
        e.sea_ = sol;
        e.u_ref_ = u10;
        e.u20_equiv_ = u10 * std::log(z20 / sol.z0) / std::log(10.0 / sol.z0);
    } else {
        if (cfg.v_air > 0.0) {
            if (!(cfg.land_z0 > 0.0) || !(z_ref > cfg.land_z0)) {
                throw ConfigError("z_ref must exceed the land roughness length");
            }
            e.u20_equiv_ = std::abs(z_ref - z20) < 1e-12
                               ? cfg.v_air
                               : cfg.v_air * std::log(z20 / cfg.land_z0) /
                                     std::log(z_ref / cfg.land_z0);
        } else {
            e.u20_equiv_ = 0.0;
        }
        e.u_ref_ = e.u20_equiv_;
    }

    e.turbulence_on_ = cfg.turbulence && cfg.v_air > 0.0;

    if (e.turbulence_on_) {
        if (cfg.n_freq < 1 || cfg.m_angle < 1 || cfg.m_angle % 2 == 0) {
            throw ConfigError("grid needs n_freq >= 1 and odd m_angle >= 1");
        }
        const int n = cfg.n_freq;
        const int m = cfg.m_angle;
        const double omega_min = 2.0 * kPi * cfg.f_min_hz;
        const double omega_max = 2.0 * kPi * cfg.f_max_hz;
        const double d_omega = (omega_max - omega_min) / n;
        const double d_theta = kPi / m;
        const field::SpreadingSpec spread =
            field::SpreadingSpec::with_exponent(cfg.spreading_exponent);

        e.freq_.resize(n);
        e.wavenumber_.resize(n);
        for (int i = 0; i < n; ++i) {
            e.freq_[i] = omega_min + (i + 0.5) * d_omega;
            e.wavenumber_[i] = e.freq_[i] / e.u_ref_;
        }
        e.cos_angle_.resize(m);
        e.sin_angle_.resize(m);
        e.angle_amp_.resize(m);
        for (int j = 0; j < m; ++j) {
            const double theta = -kPi / 2.0 + (j + 0.5) * d_theta;
            e.cos_angle_[j] = std::cos(theta);
            e.sin_angle_[j] = std::sin(theta);
            e.angle_amp_[j] =
                std::sqrt(2.0 * field::spreading(theta, spread) * d_theta);
        }
        for (int stream = 0; stream < 4; ++stream) {
            e.phase_[stream].resize(static_cast<std::size_t>(n) * m);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < m; ++j) {
                    e.phase_[stream][static_cast<std::size_t>(i) * m + j] =
                        rng::phase(cfg.seed, static_cast<std::uint64_t>(stream),
                                   static_cast<std::uint64_t>(i),
                                   static_cast<std::uint64_t>(j));
                }
            }
        }
    }

    if (cfg.gust.enable && cfg.gust.rate_per_hour > 0.0) {
        gusts::ScheduleConfig sc;
        sc.rate_per_hour = cfg.gust.rate_per_hour;
        sc.l_x = cfg.gust.l_x;
        sc.l_y = cfg.gust.l_y;
        sc.centroid = cfg.gust.centroid;
        sc.upwind_offset = cfg.gust.upwind_offset;
        e.schedule_ = gusts::schedule_gusts(cfg.gust.horizon_s, sc, cfg.v_air,
                                            cfg.theta_w, cfg.seed);
    }
    return e;
}

double WindEngine::mean_wind_at(double z) const {
    // Log profile anchored so the configured mean is recovered at z_ref.
    const double z0 = cfg_.terrain == Terrain::OverWater ? sea_->z0 : cfg_.land_z0;
    const double z_ref = cfg_.effective_z_ref();
    return cfg_.v_air * std::log(z / z0) / std::log(z_ref / z0);
}

spectra::SpectrumModel WindEngine::component_spectrum(spectra::Component c,
                                                      double z) const {
    if (cfg_.terrain == Terrain::OverLand) {
        return spectra::SpectrumModel::von_karman(
            vk_family(c),
            spectra::VonKarmanParams::from_si(u20_equiv_, z, cfg_.wingspan));
    }
    const spectra::OchiShinParams os{z, mean_wind_at(z), sea_->u_star};
    if (c == spectra::Component::Longitudinal) {
        return spectra::SpectrumModel::ochi_shin(os);
    }
    return spectra::SpectrumModel::ochi_shin_component(
        c, os, spectra::VonKarmanParams::from_si(u20_equiv_, z, cfg_.wingspan));
}

WindEngine::Slice WindEngine::make_slice(double z) const {
    Slice slice;
    const double omega_min = 2.0 * kPi * cfg_.f_min_hz;
    const double omega_max = 2.0 * kPi * cfg_.f_max_hz;
    const double d_omega = (omega_max - omega_min) / cfg_.n_freq;
    for (int c = 0; c < 6; ++c) {
        const spectra::SpectrumModel model = component_spectrum(kComponents[c], z);
        slice.amp[c].resize(freq_.size());
        for (std::size_t i = 0; i < freq_.size(); ++i) {
            slice.amp[c][i] =
                std::sqrt(spectra::eval_psd(model, freq_[i]) * d_omega);
        }
    }
    return slice;
}

const WindEngine::Slice& WindEngine::slice_for(double z) const {
    constexpr std::size_t kMaxCachedAltitudes = 4096;
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->by_altitude.find(z);
        if (it != cache_->by_altitude.end()) {
            return it->second;
        }
        if (cache_->by_altitude.size() < kMaxCachedAltitudes) {
            return cache_->by_altitude.emplace(z, make_slice(z)).first->second;
        }
    }
    // Cache full: fall back to per-thread scratch storage. The reference is
    // only used within the calling sample(), never across calls.
    static thread_local Slice scratch;
    scratch = make_slice(z);
    return scratch;
}

WindSample WindEngine::sample(const Vec3& p, double t) const {
    double turb[6] = {0, 0, 0, 0, 0, 0};

    if (turbulence_on_) {
        const Slice& slice = slice_for(clamp_altitude(p[2]));
        const double xw = p[0] * cos_w_ + p[1] * sin_w_;
        const double yw = -p[0] * sin_w_ + p[1] * cos_w_;
        const std::size_t n = freq_.size();
        const std::size_t m = cos_angle_.size();

        for (int c = 0; c < 6; ++c) {
            const double* spec_amp = slice.amp[c].data();
            const double* psi = phase_[kPhaseStream[c]].data();
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (spec_amp[i] == 0.0) {
                    continue;
                }
                const double kxw = wavenumber_[i] * xw;
                const double kyw = wavenumber_[i] * yw;
                const double wt = freq_[i] * t;
                const double* psi_row = psi + i * m;
                double inner = 0.0;
                for (std::size_t j = 0; j < m; ++j) {
                    inner += angle_amp_[j] *
                             std::cos(kxw * cos_angle_[j] + kyw * sin_angle_[j] -
                                      wt + psi_row[j]);
                }
                acc += spec_amp[i] * inner;
            }
            turb[c] = acc;
        }
    }

    const double gust = schedule_.events.empty() ? 0.0 : schedule_.velocity(p, t);
    const double v_lon = turb[0] + cfg_.v_air + gust;
    const double v_lat = turb[1];

    WindSample out;
    out.velocity = {v_lon * cos_w_ - v_lat * sin_w_,
                    v_lon * sin_w_ + v_lat * cos_w_, turb[2]};
    out.rates = {turb[3], turb[4], turb[5]};
    return out;
}

std::vector<WindSample> WindEngine::sample_many(std::span<const Vec3> positions,
                                                double t, unsigned threads) const {
    std::vector<WindSample> out(positions.size());
    if (positions.empty()) {
        return out;
    }
    if (threads <= 1 || positions.size() == 1) {
        for (std::size_t i = 0; i < positions.size(); ++i) {
            out[i] = sample(positions[i], t);
        }
        return out;
    }

    const unsigned workers =
        std::min<unsigned>(threads, static_cast<unsigned>(positions.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < positions.size(); i += workers) {
                out[i] = sample(positions[i], t);
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
    return out;
}

bool WindEngine::gust_active(const Vec3& p, double t) const {
    return !schedule_.events.empty() && schedule_.any_active(p, t);
}

} // namespace gale::engine
