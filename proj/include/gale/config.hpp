// Flat key/value run configuration with dotted sections.
//
// The document mirrors EnvironmentConfig plus output and vehicle settings.
// Parsing is strict: unknown or duplicate keys are rejected with the
// offending key named, and a dumped configuration re-parses to an identical
// engine.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gale/units.hpp"
#include "gale/wind_engine.hpp"

namespace gale::cli {

struct VehicleSpec {
    Vec3 position{0.0, 0.0, 0.0};
    std::string trajectory_path; ///< CSV of t,x,y,z; empty for a fixed position

    bool operator==(const VehicleSpec&) const = default;
};

struct RunConfig {
    engine::EnvironmentConfig env;
    double sample_rate = 50.0; ///< output samples per second
    double duration = 60.0;    ///< simulated span [s]
    std::vector<VehicleSpec> vehicles;

    static RunConfig parse(std::istream& is, const std::string& origin = "<config>");
    static RunConfig parse_file(const std::string& path);

    /// Writes every effective key; numbers use shortest round-trip form.
    void dump(std::ostream& os) const;

    bool operator==(const RunConfig&) const = default;
};

/// Advisory notes: values that are accepted but outside the usual ranges
/// (wave phase speed ratio, Harris scaling length, band above 8 Hz).
std::vector<std::string> config_warnings(const RunConfig& cfg);

} // namespace gale::cli
