#include "gale/gusts.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "gale/csv.hpp"
#include "gale/errors.hpp"
#include "gale/rng.hpp"

namespace gale::gusts {

namespace {

// rng stream ids; turbulence phase streams occupy small values.
constexpr std::uint64_t kArrivalStream = 0x6775;

double bump(double x, double dip) {
    return (1.0 - x * x) * std::exp(-x * x / dip);
}

} // namespace

GustShapeParams GustShapeParams::create(double g1, double t_g1, double t_g2,
                                        double t_h, double g3, double g4,
                                        double g5) {
    if (g1 < 0.0) {
        throw ConfigError("gust amplitude must be non-negative");
    }
    if (!(t_g1 > 0.0) || !(t_g2 > 0.0)) {
        throw ConfigError("rise and fall spans must be positive");
    }
    if (t_h < 0.0) {
        throw ConfigError("hold span must be non-negative");
    }
    if (!(g3 > 0.0) || !(g4 > 0.0) || !(g5 > 0.0)) {
        throw ConfigError("shape constants g3, g4, g5 must be positive");
    }
    return GustShapeParams{g1, t_g1, t_g2, t_h, g3, g4, g5};
}

GustShapeParams GustShapeParams::from_duration(double g1, double tau,
                                               double hold_fraction) {
    if (!(tau > 0.0)) {
        throw ConfigError("gust duration must be positive");
    }
    if (hold_fraction < 0.0 || hold_fraction >= 1.0) {
        throw ConfigError("hold fraction must lie in [0, 1)");
    }
    // support = t_g1/2 + t_h + t_g2/2 = tau with t_g1 = t_g2
    const double t_h = hold_fraction * tau;
    const double span = (1.0 - hold_fraction) * tau;
    return create(g1, span, span, t_h);
}

double gust_amplitude(double v_air) {
    if (v_air < 0.0) {
        throw DomainError("mean wind speed must be non-negative");
    }
    const double v = (52.0 / 43.0) * v_air - 0.125;
    return v > 0.0 ? v : 0.0;
}

double gust_duration(double v_gust, double v_air) {
    if (v_gust < v_air) {
        throw DomainError("gust amplitude must be at least the mean wind speed");
    }
    return 0.71 * (v_gust - v_air) + 3.51;
}

double gust_shape(double t, const GustShapeParams& p) {
    if (t <= 0.0) {
        return 0.0;
    }
    const double half_rise = 0.5 * p.t_g1;
    if (t < half_rise) {
        return p.g1 * bump(p.rise_rate() * t - p.g3, p.g4);
    }
    if (t <= half_rise + p.t_h) {
        return p.g1;
    }
    if (t >= p.support_end()) {
        return 0.0;
    }
    const double t_star = t + 0.5 * (p.t_g2 - p.t_g1) - p.t_h;
    return p.g1 * bump(p.fall_rate() * t_star - p.g3, p.g5);
}

double gust_spread_probability(double dx, double dy, double l_x, double l_y) {
    if (!(l_x > 0.0) || !(l_y > 0.0)) {
        throw DomainError("spread lengths must be positive");
    }
    const double longitudinal = dx <= 0.0 ? 1.0 : std::exp(-dx / l_x);
    return longitudinal * std::exp(-std::abs(dy) / l_y);
}

double gust_velocity(const GustEvent& e, const Vec3& p, double t) {
    if (!(e.v_air > 0.0)) {
        throw ConfigError("gust propagation is undefined for zero mean wind");
    }
    const double dir_x = std::cos(e.theta_w);
    const double dir_y = std::sin(e.theta_w);

    const double rel_x = p[0] - e.origin[0];
    const double rel_y = p[1] - e.origin[1];
    const double along = rel_x * dir_x + rel_y * dir_y;

    // Retarded time: the gust front needs along / v_air to reach the point.
    const double t_local = (t - e.t_start) - along / e.v_air;
    if (t_local <= 0.0 || t_local >= e.shape.support_end()) {
        return 0.0;
    }

    // Offsets from the moving gust center, in the wind frame.
    const double travel = e.v_air * (t - e.t_start);
    const double cx = rel_x - travel * dir_x;
    const double cy = rel_y - travel * dir_y;
    const double dx = cx * dir_x + cy * dir_y;
    const double dy = -cx * dir_y + cy * dir_x;

    return gust_spread_probability(dx, dy, e.l_x, e.l_y) *
           gust_shape(t_local, e.shape);
}

bool gust_active(const GustEvent& e, const Vec3& p, double t) {
    return gust_velocity(e, p, t) != 0.0;
}

double GustSchedule::velocity(const Vec3& p, double t) const {
    double acc = 0.0;
    for (const GustEvent& e : events) {
        acc += gust_velocity(e, p, t);
    }
    return acc;
}

bool GustSchedule::any_active(const Vec3& p, double t) const {
    for (const GustEvent& e : events) {
        if (gust_active(e, p, t)) {
            return true;
        }
    }
    return false;
}

GustSchedule schedule_gusts(double horizon_s, const ScheduleConfig& cfg,
                            double v_air, double theta_w, std::uint64_t seed) {
    if (!(horizon_s > 0.0)) {
        throw ConfigError("schedule horizon must be positive");
    }
    if (cfg.rate_per_hour < 0.0) {
        throw ConfigError("gust rate must be non-negative");
    }

    GustSchedule schedule;
    schedule.rate_per_hour = cfg.rate_per_hour;
    schedule.seed = seed;
    if (cfg.rate_per_hour == 0.0) {
        return schedule;
    }
    if (!(v_air > 0.0)) {
        throw ConfigError("gust scheduling requires a positive mean wind speed");
    }

    const double mean_gap = 3600.0 / cfg.rate_per_hour;
    const Vec3 origin{cfg.centroid[0] - cfg.upwind_offset * std::cos(theta_w),
                      cfg.centroid[1] - cfg.upwind_offset * std::sin(theta_w),
                      cfg.centroid[2]};

    const double amplitude = gust_amplitude(v_air);
    // The POT fit drops below the mean for very light wind; the duration fit
    // is then evaluated at zero relative amplitude.
    const double relative = amplitude > v_air ? amplitude - v_air : 0.0;
    const double tau = gust_duration(v_air + relative, v_air);
    const GustShapeParams shape = GustShapeParams::from_duration(amplitude, tau);

    double t = 0.0;
    for (std::uint64_t k = 0;; ++k) {
        t += rng::exponential(seed, kArrivalStream, k, mean_gap);
        if (t > horizon_s) {
            break;
        }
        schedule.events.push_back(GustEvent{t, origin, shape, cfg.l_x, cfg.l_y,
                                            theta_w, v_air});
    }
    return schedule;
}

void write_schedule_csv(std::ostream& os, const GustSchedule& schedule) {
    os << "t_start,x,y,g1,t_g1,t_h,t_g2,l_x,l_y\n";
    for (const GustEvent& e : schedule.events) {
        os << csv::format(e.t_start) << ',' << csv::format(e.origin[0]) << ','
           << csv::format(e.origin[1]) << ',' << csv::format(e.shape.g1) << ','
           << csv::format(e.shape.t_g1) << ',' << csv::format(e.shape.t_h)
           << ',' << csv::format(e.shape.t_g2) << ',' << csv::format(e.l_x)
           << ',' << csv::format(e.l_y) << '\n';
    }
}

GustSchedule read_schedule_csv(std::istream& is, double v_air, double theta_w,
                               double rate_per_hour, std::uint64_t seed) {
    GustSchedule schedule;
    schedule.rate_per_hour = rate_per_hour;
    schedule.seed = seed;

    std::string line;
    if (!std::getline(is, line)) {
        throw IoError("gust schedule CSV is empty");
    }
    if (line != "t_start,x,y,g1,t_g1,t_h,t_g2,l_x,l_y") {
        throw IoError("unexpected gust schedule CSV header: " + line);
    }
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream ss(line);
        double v[9];
        std::string cell;
        for (int k = 0; k < 9; ++k) {
            if (!std::getline(ss, cell, ',')) {
                throw IoError("gust schedule CSV line " + std::to_string(line_no) +
                              " has fewer than 9 columns");
            }
            try {
                v[k] = std::stod(cell);
            } catch (const std::exception&) {
                throw IoError("gust schedule CSV line " + std::to_string(line_no) +
                              ": bad number '" + cell + "'");
            }
        }
        GustEvent e{v[0], Vec3{v[1], v[2], 0.0},
                    GustShapeParams::create(v[3], v[4], v[6], v[5]), v[7], v[8],
                    theta_w, v_air};
        schedule.events.push_back(e);
    }
    return schedule;
}

} // namespace gale::gusts
