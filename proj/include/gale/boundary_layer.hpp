// Mean-wind vertical profile and the coupled friction-velocity / sea-roughness
// fixed-point solver with Charnock and Volkov closures.
#pragma once

#include <cstdint>

namespace gale::boundary_layer {

enum class Closure { Charnock, Volkov };

struct SeaStateInput {
    double u10;              ///< mean wind speed at 10 m [m/s]
    double c_p;              ///< wave phase speed [m/s]
    Closure closure = Closure::Volkov;
    double epsilon = 0.001;  ///< convergence tolerance [m/s]
    int max_iter = 100;

    /// True when c_p/u10 lies in the realistic 0.03..1.0 band.
    bool phase_speed_in_usual_range() const {
        return c_p >= 0.03 * u10 && c_p <= 1.0 * u10;
    }
};

struct SeaStateSolution {
    double u_star;          ///< converged friction velocity [m/s]
    double z0;              ///< sea roughness length [m]
    double drag_coefficient; ///< C = u*^2 / u10^2
    int iterations;
    double wave_age;        ///< c_p / u_star
};

/// Logarithmic mean-wind profile u(z) = (u*/k) ln(z/z0), k = 0.42.
double log_wind_profile(double z, double u_star, double z0);

/// u* = sqrt(tau / rho) from measured shear stress.
double friction_velocity_from_stress(double tau, double rho);

/// Charnock sea roughness z0 = 0.0144 u*^2 / g.
double charnock_roughness(double u_star);

/// Volkov sea roughness: wave-age dependent non-dimensional roughness
/// mapped through z0 = z0* u*^2 / g.
double volkov_roughness(double u_star, double c_p);

/// Drag coefficient estimate C = (0.65 + 0.067 u10) * 1e-3, used to seed
/// the fixed-point iteration via u* = sqrt(C) u10.
double drag_coefficient_estimate(double u10);

/// Successive substitution on u* = 0.4 u10 / ln(10 / z0(u*)).
SeaStateSolution solve_friction_velocity(const SeaStateInput& input);

} // namespace gale::boundary_layer
