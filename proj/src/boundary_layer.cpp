#include "gale/boundary_layer.hpp"

#include <cmath>
#include <vector>

#include "gale/errors.hpp"
#include "gale/units.hpp"

namespace gale::boundary_layer {

namespace {

// Von Karman constant of the mean profile. The 10 m inversion inside the
// solver uses 0.4 as printed there; the two are kept distinct on purpose.
constexpr double kProfileVonKarman = 0.42;
constexpr double kSolverVonKarman = 0.4;

double roughness(Closure closure, double u_star, double c_p) {
    return closure == Closure::Charnock ? charnock_roughness(u_star)
                                        : volkov_roughness(u_star, c_p);
}

} // namespace

double log_wind_profile(double z, double u_star, double z0) {
    if (!(z0 > 0.0) || !(u_star > 0.0)) {
        throw DomainError("u_star and z0 must be positive");
    }
    if (!(z > z0)) {
        throw DomainError("altitude must exceed the roughness length");
    }
    return u_star / kProfileVonKarman * std::log(z / z0);
}

double friction_velocity_from_stress(double tau, double rho) {
    if (tau < 0.0) {
        throw DomainError("shear stress must be non-negative");
    }
    if (!(rho > 0.0)) {
        throw DomainError("density must be positive");
    }
    return std::sqrt(tau / rho);
}

double charnock_roughness(double u_star) {
    if (!(u_star > 0.0)) {
        throw DomainError("u_star must be positive");
    }
    return 0.0144 * u_star * u_star / kGravity;
}

double volkov_roughness(double u_star, double c_p) {
    if (!(u_star > 0.0) || !(c_p > 0.0)) {
        throw DomainError("u_star and c_p must be positive");
    }
    const double x_wa = c_p / u_star;
    double z0_star;
    if (x_wa <= 0.35) {
        z0_star = 0.0185;
    } else if (x_wa < 35.0) {
        z0_star = 0.03 * x_wa * std::exp(-0.14 * x_wa);
    } else {
        z0_star = 0.008;
    }
    return z0_star * u_star * u_star / kGravity;
}

double drag_coefficient_estimate(double u10) {
    if (!(u10 > 0.0)) {
        throw DomainError("u10 must be positive");
    }
    return (0.65 + 0.067 * u10) * 1e-3;
}

SeaStateSolution solve_friction_velocity(const SeaStateInput& input) {
    if (!(input.u10 > 0.0)) {
        throw DomainError("u10 must be positive");
    }
    if (!(input.c_p > 0.0)) {
        throw DomainError("c_p must be positive");
    }
    if (!(input.epsilon > 0.0)) {
        throw DomainError("epsilon must be positive");
    }
    if (input.max_iter < 1) {
        throw DomainError("max_iter must be at least 1");
    }

    double u_star = std::sqrt(drag_coefficient_estimate(input.u10)) * input.u10;
    std::vector<double> iterates{u_star};

    double z0 = 0.0;
    for (int i = 0; i < input.max_iter; ++i) {
        z0 = roughness(input.closure, u_star, input.c_p);
        if (z0 >= 10.0) {
            throw ConvergenceError(
                "roughness reached 10 m; the 10 m log profile is undefined",
                iterates);
        }
        const double next =
            kSolverVonKarman * input.u10 / std::log(10.0 / z0);
        const double err = std::abs(next - u_star);
        u_star = next;
        iterates.push_back(u_star);
        if (err <= input.epsilon) {
            SeaStateSolution out;
            out.u_star = u_star;
            out.z0 = roughness(input.closure, u_star, input.c_p);
            out.drag_coefficient = u_star * u_star / (input.u10 * input.u10);
            out.iterations = static_cast<int>(iterates.size()) - 1;
            out.wave_age = input.c_p / u_star;
            return out;
        }
    }
    throw ConvergenceError("friction velocity iteration did not converge",
                           iterates);
}

} // namespace gale::boundary_layer
