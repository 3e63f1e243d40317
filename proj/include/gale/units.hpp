// Shared constants and small geometric types.
#pragma once

#include <array>

namespace gale {

/// Conversion used for every SI <-> imperial crossing in the library.
inline constexpr double kFeetPerMeter = 3.28084;

/// Gravitational acceleration (m/s^2).
inline constexpr double kGravity = 9.81;

/// Position / velocity triple in the inertial frame (x, y, z up), SI units.
using Vec3 = std::array<double, 3>;

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

} // namespace gale
