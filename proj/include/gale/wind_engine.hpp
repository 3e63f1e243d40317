// Composition root: builds the six turbulence component fields for a
// configured environment (Von Karman over land, ratio-scaled Ochi-Shin over
// water), schedules gusts, and answers point queries with the full
// translational + rotational wind vector.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "gale/boundary_layer.hpp"
#include "gale/gusts.hpp"
#include "gale/spectra.hpp"
#include "gale/units.hpp"

namespace gale::engine {

enum class Terrain { OverLand, OverWater };

struct GustSettings {
    bool enable = false;
    double rate_per_hour = 13.5;
    double l_x = 200.0;
    double l_y = 250.0;
    Vec3 centroid{0.0, 0.0, 0.0};
    double upwind_offset = 0.0;
    double horizon_s = 3600.0;

    bool operator==(const GustSettings&) const = default;
};

struct EnvironmentConfig {
    Terrain terrain = Terrain::OverLand;
    double v_air = 6.0;   ///< mean wind speed at z_ref [m/s]
    double theta_w = 0.0; ///< prevailing wind direction [rad], in [0, 2pi)
    /// Reference altitude of v_air [m]; defaults to 20 ft over land and
    /// 10 m over water when left unset (<= 0).
    double z_ref = 0.0;
    double wingspan = 0.34; ///< [m]
    double c_p_ratio = 0.5; ///< wave phase speed as a fraction of u10
    boundary_layer::Closure closure = boundary_layer::Closure::Volkov;
    double land_z0 = 0.03; ///< roughness for the over-land profile [m]
    bool turbulence = true;
    double spreading_exponent = 1.0;
    int n_freq = 256;
    int m_angle = 37;
    double f_min_hz = 0.01;
    double f_max_hz = 8.0;
    std::uint64_t seed = 0;
    GustSettings gust;

    double effective_z_ref() const {
        if (z_ref > 0.0) {
            return z_ref;
        }
        return terrain == Terrain::OverLand ? 20.0 / kFeetPerMeter : 10.0;
    }

    bool operator==(const EnvironmentConfig&) const = default;
};

/// Full wind state at a query point: translational velocity in the inertial
/// frame and rotational turbulence rates about (roll, pitch, yaw).
struct WindSample {
    Vec3 velocity{0.0, 0.0, 0.0}; ///< [m/s]
    Vec3 rates{0.0, 0.0, 0.0};    ///< [rad/s]
};

/// Wind-frame components assembled into the inertial frame by the proper
/// rotation: x = lon cos - lat sin, y = lon sin + lat cos.
Vec3 assemble_velocity(double v_lon, double v_lat, double v_vert, double theta_w);

class WindEngine {
public:
    static WindEngine build(const EnvironmentConfig& cfg);

    WindSample sample(const Vec3& p, double t) const;

    /// Element-wise sample of each position at time t; results are identical
    /// to calling sample in a loop for any thread count.
    std::vector<WindSample> sample_many(std::span<const Vec3> positions, double t,
                                        unsigned threads = 1) const;

    bool gust_active(const Vec3& p, double t) const;

    const EnvironmentConfig& config() const { return cfg_; }
    const std::optional<boundary_layer::SeaStateSolution>& sea_state() const {
        return sea_;
    }
    const gusts::GustSchedule& gust_schedule() const { return schedule_; }
    /// Reference mean wind used for the wavenumber k = omega / u_ref.
    double u_ref() const { return u_ref_; }

private:
    WindEngine() = default;

    // sqrt(S_c(omega_i) * d_omega) for the six components at one altitude
    struct Slice {
        std::vector<double> amp[6];
    };
    struct SliceCache {
        std::mutex mutex;
        std::map<double, Slice> by_altitude;
    };

    spectra::SpectrumModel component_spectrum(spectra::Component c, double z) const;
    Slice make_slice(double z) const;
    const Slice& slice_for(double z) const;
    double mean_wind_at(double z) const;

    EnvironmentConfig cfg_;
    std::optional<boundary_layer::SeaStateSolution> sea_;
    gusts::GustSchedule schedule_;
    bool turbulence_on_ = false;

    std::vector<double> freq_;      // omega_i
    std::vector<double> wavenumber_;
    std::vector<double> cos_angle_;
    std::vector<double> sin_angle_;
    std::vector<double> angle_amp_; // sqrt(2 D(theta_j) d_theta)
    std::vector<double> phase_[4];  // per rng stream, row-major [n x m]
    double cos_w_ = 1.0;
    double sin_w_ = 0.0;
    double u_ref_ = 0.0;
    double u20_equiv_ = 0.0; // SI mean wind at 20 ft for matched VK conditions

    std::unique_ptr<SliceCache> cache_ = std::make_unique<SliceCache>();
};

inline WindEngine build_engine(const EnvironmentConfig& cfg) {
    return WindEngine::build(cfg);
}

} // namespace gale::engine
