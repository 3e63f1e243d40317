#include "gale/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "gale/csv.hpp"
#include "gale/errors.hpp"

namespace gale::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto r = std::from_chars(begin, end, out);
    if (r.ec != std::errc{} || r.ptr != end) {
        throw ConfigError("key '" + key + "': expected a number, got '" + value + "'");
    }
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto r = std::from_chars(begin, end, out);
    if (r.ec != std::errc{} || r.ptr != end) {
        throw ConfigError("key '" + key + "': expected an unsigned integer, got '" +
                          value + "'");
    }
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto r = std::from_chars(begin, end, out);
    if (r.ec != std::errc{} || r.ptr != end) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") {
        return true;
    }
    if (value == "false") {
        return false;
    }
    throw ConfigError("key '" + key + "': expected true or false, got '" + value + "'");
}

Vec3 parse_vec3(const std::string& key, const std::string& value) {
    std::istringstream ss(value);
    std::string cell;
    Vec3 out{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, cell, ',')) {
            throw ConfigError("key '" + key + "': expected x,y,z");
        }
        out[i] = parse_double(key, trim(cell));
    }
    if (std::getline(ss, cell, ',')) {
        throw ConfigError("key '" + key + "': expected exactly three components");
    }
    return out;
}

} // namespace

RunConfig RunConfig::parse(std::istream& is, const std::string& origin) {
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected 'key = value', got '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
        }
        if (!kv.emplace(key, value).second) {
            throw ConfigError(origin + ": duplicate key '" + key + "'");
        }
    }

    RunConfig cfg;
    std::map<int, VehicleSpec> vehicles;

    auto take = [&kv](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        if (it == kv.end()) {
            return nullptr;
        }
        return &it->second;
    };

    std::vector<std::string> consumed;
    auto use = [&](const std::string& key) -> const std::string* {
        const std::string* v = take(key);
        if (v) {
            consumed.push_back(key);
        }
        return v;
    };

    if (const auto* v = use("environment.terrain")) {
        if (*v == "over_land") {
            cfg.env.terrain = engine::Terrain::OverLand;
        } else if (*v == "over_water") {
            cfg.env.terrain = engine::Terrain::OverWater;
        } else {
            throw ConfigError("key 'environment.terrain': expected over_land or "
                              "over_water, got '" + *v + "'");
        }
    }
    if (const auto* v = use("environment.v_air")) cfg.env.v_air = parse_double("environment.v_air", *v);
    if (const auto* v = use("environment.theta_w")) cfg.env.theta_w = parse_double("environment.theta_w", *v);
    if (const auto* v = use("environment.z_ref")) cfg.env.z_ref = parse_double("environment.z_ref", *v);
    if (const auto* v = use("environment.wingspan")) cfg.env.wingspan = parse_double("environment.wingspan", *v);
    if (const auto* v = use("environment.c_p_ratio")) cfg.env.c_p_ratio = parse_double("environment.c_p_ratio", *v);
    if (const auto* v = use("environment.closure")) {
        if (*v == "charnock") {
            cfg.env.closure = boundary_layer::Closure::Charnock;
        } else if (*v == "volkov") {
            cfg.env.closure = boundary_layer::Closure::Volkov;
        } else {
            throw ConfigError("key 'environment.closure': expected charnock or "
                              "volkov, got '" + *v + "'");
        }
    }
    if (const auto* v = use("environment.land_z0")) cfg.env.land_z0 = parse_double("environment.land_z0", *v);
    if (const auto* v = use("environment.turbulence")) cfg.env.turbulence = parse_bool("environment.turbulence", *v);

    if (const auto* v = use("grid.n_freq")) cfg.env.n_freq = parse_int("grid.n_freq", *v);
    if (const auto* v = use("grid.m_angle")) cfg.env.m_angle = parse_int("grid.m_angle", *v);
    if (const auto* v = use("grid.f_min")) cfg.env.f_min_hz = parse_double("grid.f_min", *v);
    if (const auto* v = use("grid.f_max")) cfg.env.f_max_hz = parse_double("grid.f_max", *v);
    if (const auto* v = use("grid.spreading_s")) cfg.env.spreading_exponent = parse_double("grid.spreading_s", *v);
    if (const auto* v = use("grid.seed")) cfg.env.seed = parse_u64("grid.seed", *v);

    if (const auto* v = use("gust.enable")) cfg.env.gust.enable = parse_bool("gust.enable", *v);
    if (const auto* v = use("gust.rate_per_hour")) cfg.env.gust.rate_per_hour = parse_double("gust.rate_per_hour", *v);
    if (const auto* v = use("gust.l_x")) cfg.env.gust.l_x = parse_double("gust.l_x", *v);
    if (const auto* v = use("gust.l_y")) cfg.env.gust.l_y = parse_double("gust.l_y", *v);
    if (const auto* v = use("gust.centroid_x")) cfg.env.gust.centroid[0] = parse_double("gust.centroid_x", *v);
    if (const auto* v = use("gust.centroid_y")) cfg.env.gust.centroid[1] = parse_double("gust.centroid_y", *v);
    if (const auto* v = use("gust.upwind_offset")) cfg.env.gust.upwind_offset = parse_double("gust.upwind_offset", *v);
    if (const auto* v = use("gust.horizon")) cfg.env.gust.horizon_s = parse_double("gust.horizon", *v);

    if (const auto* v = use("output.sample_rate")) {
        cfg.sample_rate = parse_double("output.sample_rate", *v);
        if (!(cfg.sample_rate > 0.0)) {
            throw ConfigError("key 'output.sample_rate': must be positive");
        }
    }
    if (const auto* v = use("output.duration")) {
        cfg.duration = parse_double("output.duration", *v);
        if (!(cfg.duration > 0.0)) {
            throw ConfigError("key 'output.duration': must be positive");
        }
    }

    for (const auto& [key, value] : kv) {
        if (std::find(consumed.begin(), consumed.end(), key) != consumed.end()) {
            continue;
        }
        if (key.rfind("vehicle.", 0) == 0 || key.rfind("trajectory.", 0) == 0) {
            const bool is_traj = key[0] == 't';
            const std::string idx_str = key.substr(is_traj ? 11 : 8);
            int idx = parse_int(key, idx_str);
            if (idx < 0) {
                throw ConfigError("key '" + key + "': index must be non-negative");
            }
            if (vehicles.count(idx)) {
                throw ConfigError("vehicle index " + std::to_string(idx) +
                                  " defined more than once");
            }
            VehicleSpec spec;
            if (is_traj) {
                spec.trajectory_path = value;
            } else {
                spec.position = parse_vec3(key, value);
            }
            vehicles.emplace(idx, spec);
            continue;
        }
        throw ConfigError(origin + ": unknown key '" + key + "'");
    }

    for (auto& [idx, spec] : vehicles) {
        cfg.vehicles.push_back(std::move(spec));
    }
    return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw IoError("cannot open config file: " + path);
    }
    return parse(f, path);
}

void RunConfig::dump(std::ostream& os) const {
    const auto num = [](double v) { return csv::format_exact(v); };
    os << "environment.terrain = "
       << (env.terrain == engine::Terrain::OverLand ? "over_land" : "over_water")
       << '\n';
    os << "environment.v_air = " << num(env.v_air) << '\n';
    os << "environment.theta_w = " << num(env.theta_w) << '\n';
    os << "environment.z_ref = " << num(env.effective_z_ref()) << '\n';
    os << "environment.wingspan = " << num(env.wingspan) << '\n';
    os << "environment.c_p_ratio = " << num(env.c_p_ratio) << '\n';
    os << "environment.closure = "
       << (env.closure == boundary_layer::Closure::Charnock ? "charnock" : "volkov")
       << '\n';
    os << "environment.land_z0 = " << num(env.land_z0) << '\n';
    os << "environment.turbulence = " << (env.turbulence ? "true" : "false") << '\n';
    os << "grid.n_freq = " << env.n_freq << '\n';
    os << "grid.m_angle = " << env.m_angle << '\n';
    os << "grid.f_min = " << num(env.f_min_hz) << '\n';
    os << "grid.f_max = " << num(env.f_max_hz) << '\n';
    os << "grid.spreading_s = " << num(env.spreading_exponent) << '\n';
    os << "grid.seed = " << env.seed << '\n';
    os << "gust.enable = " << (env.gust.enable ? "true" : "false") << '\n';
    os << "gust.rate_per_hour = " << num(env.gust.rate_per_hour) << '\n';
    os << "gust.l_x = " << num(env.gust.l_x) << '\n';
    os << "gust.l_y = " << num(env.gust.l_y) << '\n';
    os << "gust.centroid_x = " << num(env.gust.centroid[0]) << '\n';
    os << "gust.centroid_y = " << num(env.gust.centroid[1]) << '\n';
    os << "gust.upwind_offset = " << num(env.gust.upwind_offset) << '\n';
    os << "gust.horizon = " << num(env.gust.horizon_s) << '\n';
    os << "output.sample_rate = " << num(sample_rate) << '\n';
    os << "output.duration = " << num(duration) << '\n';
    for (std::size_t i = 0; i < vehicles.size(); ++i) {
        if (vehicles[i].trajectory_path.empty()) {
            os << "vehicle." << i << " = " << num(vehicles[i].position[0]) << ','
               << num(vehicles[i].position[1]) << ',' << num(vehicles[i].position[2])
               << '\n';
        } else {
            os << "trajectory." << i << " = " << vehicles[i].trajectory_path << '\n';
        }
    }
}

std::vector<std::string> config_warnings(const RunConfig& cfg) {
    std::vector<std::string> out;
    if (cfg.env.terrain == engine::Terrain::OverWater &&
        (cfg.env.c_p_ratio < 0.03 || cfg.env.c_p_ratio > 1.0)) {
        out.push_back("c_p_ratio " + csv::format(cfg.env.c_p_ratio) +
                      " is outside the realistic band [0.03, 1.0]");
    }
    if (cfg.env.f_max_hz > 8.0) {
        out.push_back("band extends above 8 Hz; the spectral models are "
                      "validated for 0-8 Hz");
    }
    return out;
}

} // namespace gale::cli
