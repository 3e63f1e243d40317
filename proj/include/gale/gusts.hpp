// Discrete propagating gusts: amplitude and duration laws fitted to wind-farm
// statistics, a generalized rise / hold / fall shape curve, Poisson
// scheduling, downwind propagation at the mean wind speed, and exponential
// lateral / longitudinal dissipation.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gale/units.hpp"

namespace gale::gusts {

/// Parameters of the piecewise gust shape curve.
///
/// Rising bump on (0, t_g1/2), flat peak g1 on [t_g1/2, t_g1/2 + t_h],
/// falling bump afterwards; zero outside (0, t_g1/2 + t_h + t_g2/2).
///
/// The cutoff g3 = 6 puts the curve within 1% of zero at the support edges
/// for dip factors up to ~4.4; larger g4/g5 leave a visible step there.
struct GustShapeParams {
    double g1;   ///< peak amplitude [m/s]
    double t_g1; ///< rise span [s]
    double t_g2; ///< fall span [s]
    double t_h;  ///< hold span at the peak [s]
    double g3 = 6.0; ///< curve cutoff constant
    double g4 = 2.0; ///< pre-gust dip factor
    double g5 = 2.0; ///< post-gust dip factor

    static GustShapeParams create(double g1, double t_g1, double t_g2,
                                  double t_h, double g3 = 6.0, double g4 = 2.0,
                                  double g5 = 2.0);

    /// Splits a total duration tau into spans: hold = hold_fraction * tau and
    /// symmetric rise/fall spans so the support length equals tau.
    static GustShapeParams from_duration(double g1, double tau,
                                         double hold_fraction = 0.2);

    double rise_rate() const { return 2.0 * g3 / t_g1; } // g_2r
    double fall_rate() const { return 2.0 * g3 / t_g2; } // g_2f
    double support_end() const { return 0.5 * t_g1 + t_h + 0.5 * t_g2; }
};

/// Peak-over-threshold linear fit of gust amplitude to the mean wind speed,
/// clamped below at zero.
double gust_amplitude(double v_air);

/// Linear fit of gust duration to the relative amplitude v_gust - v_air.
double gust_duration(double v_gust, double v_air);

/// Nominal gust magnitude at time t since gust start.
double gust_shape(double t, const GustShapeParams& p);

/// Detection probability / magnitude scale for a point offset (dx, dy) from
/// the gust center in the wind frame. The longitudinal factor is clamped to 1
/// for points upwind of the center (dx < 0).
double gust_spread_probability(double dx, double dy, double l_x, double l_y);

/// One scheduled gust. The center propagates from origin at speed v_air
/// along theta_w.
struct GustEvent {
    double t_start;  ///< [s]
    Vec3 origin;     ///< gust starting position [m]
    GustShapeParams shape;
    double l_x;      ///< longitudinal spread length [m]
    double l_y;      ///< lateral spread length [m]
    double theta_w;  ///< prevailing wind direction [rad]
    double v_air;    ///< propagation speed = mean wind speed [m/s]
};

/// Scalar gust contribution of one event at position p and time t,
/// directed along the prevailing wind.
double gust_velocity(const GustEvent& e, const Vec3& p, double t);

/// True when the event contributes a nonzero magnitude at (p, t).
bool gust_active(const GustEvent& e, const Vec3& p, double t);

struct ScheduleConfig {
    double rate_per_hour = 13.5;
    double l_x = 200.0;
    double l_y = 250.0;
    Vec3 centroid{0.0, 0.0, 0.0}; ///< operating-area centroid [m]
    double upwind_offset = 0.0;   ///< gust origins are placed this far upwind [m]
};

struct GustSchedule {
    std::vector<GustEvent> events; ///< ordered by start time
    double rate_per_hour = 0.0;
    std::uint64_t seed = 0;

    /// Superposed gust magnitude of all events at (p, t).
    double velocity(const Vec3& p, double t) const;
    bool any_active(const Vec3& p, double t) const;
};

/// Homogeneous Poisson schedule on [0, horizon]; deterministic under seed.
GustSchedule schedule_gusts(double horizon_s, const ScheduleConfig& cfg,
                            double v_air, double theta_w, std::uint64_t seed);

/// CSV schedule exchange: header row plus one event per line with columns
/// t_start, x, y, g1, t_g1, t_h, t_g2, l_x, l_y.
void write_schedule_csv(std::ostream& os, const GustSchedule& schedule);
GustSchedule read_schedule_csv(std::istream& is, double v_air, double theta_w,
                               double rate_per_hour = 0.0, std::uint64_t seed = 0);

} // namespace gale::gusts
