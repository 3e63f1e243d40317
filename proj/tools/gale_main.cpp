// gale - spatio-temporal wind field generator.
//
// Subcommands: spectrum | friction | timeseries | field | simulate | gusts |
// validate. Every command is deterministic given (config, seed); output is
// CSV with a header row, 9 significant digits, LF line endings.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gale/boundary_layer.hpp"
#include "gale/config.hpp"
#include "gale/csv.hpp"
#include "gale/errors.hpp"
#include "gale/field_synthesis.hpp"
#include "gale/gusts.hpp"
#include "gale/spectra.hpp"
#include "gale/units.hpp"
#include "gale/validation.hpp"
#include "gale/wind_engine.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct GlobalOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    unsigned threads = 1;
    bool dump_config = false;
};

// Output sink: file when --out is given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw gale::IoError("cannot open output file: " + path);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        stream().flush();
        if (file_.is_open() && !file_) {
            throw gale::IoError("failed writing output file");
        }
        if (!file_.is_open() && !std::cout) {
            throw gale::IoError("failed writing to stdout");
        }
    }

private:
    std::ofstream file_;
};

gale::cli::RunConfig load_config(const GlobalOpts& g) {
    gale::cli::RunConfig cfg;
    if (!g.config_path.empty()) {
        cfg = gale::cli::RunConfig::parse_file(g.config_path);
    }
    if (g.seed) {
        cfg.env.seed = *g.seed;
    } else if (g.config_path.empty() || cfg.env.seed == 0) {
        if (const char* env_seed = std::getenv("GALE_SEED")) {
            try {
                cfg.env.seed = std::stoull(env_seed);
            } catch (const std::exception&) {
                throw gale::ConfigError("GALE_SEED is not an unsigned integer");
            }
        }
    }
    for (const std::string& w : gale::cli::config_warnings(cfg)) {
        std::cerr << "warning: " << w << "\n";
    }
    return cfg;
}

std::vector<std::string> names(std::initializer_list<const char*> list) {
    return {list.begin(), list.end()};
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumOpts {
    std::string model = "ochi-shin";
    double u20 = 6.0, z = 10.0, b = 0.34;
    double u10 = 10.0, length = 60.0, drag = 0.002;
    double uz = 10.0, ustar = 0.45, af = 42.0, bf = 63.0;
    double f_min = 0.01, f_max = 8.0;
    int points = 512;
};

gale::spectra::SpectrumModel make_model(const SpectrumOpts& o) {
    using namespace gale::spectra;
    if (o.model == "vk-lon" || o.model == "vk-lat" || o.model == "vk-vert" ||
        o.model == "vk-roll" || o.model == "vk-pitch" || o.model == "vk-yaw") {
        Family f = Family::VkLongitudinal;
        if (o.model == "vk-lat") f = Family::VkLateral;
        if (o.model == "vk-vert") f = Family::VkVertical;
        if (o.model == "vk-roll") f = Family::VkRoll;
        if (o.model == "vk-pitch") f = Family::VkPitch;
        if (o.model == "vk-yaw") f = Family::VkYaw;
        return SpectrumModel::von_karman(f, VonKarmanParams::from_si(o.u20, o.z, o.b));
    }
    if (o.model == "harris") {
        HarrisParams p{o.u10, o.length, o.drag};
        if (!p.length_in_usual_range()) {
            std::cerr << "warning: Harris scaling length " << o.length
                      << " m is outside the usual 50-400 m range\n";
        }
        return SpectrumModel::harris(p);
    }
    if (o.model == "forristall") {
        return SpectrumModel::forristall({o.af, o.bf, o.z, o.uz, o.ustar});
    }
    if (o.model == "ochi-shin") {
        return SpectrumModel::ochi_shin({o.z, o.uz, o.ustar});
    }
    throw gale::ConfigError("unknown spectrum model: " + o.model);
}

int cmd_spectrum(const GlobalOpts& g, const SpectrumOpts& o) {
    if (!(o.f_min > 0.0) || !(o.f_max > o.f_min)) {
        throw gale::ConfigError("spectrum range must satisfy 0 < f_min < f_max");
    }
    if (o.points < 2) {
        throw gale::ConfigError("spectrum needs at least 2 points");
    }
    if (o.f_max > 8.0) {
        std::cerr << "warning: band extends above the validated 8 Hz limit\n";
    }
    const auto model = make_model(o);

    Sink sink(g.out_path);
    gale::csv::Writer w(sink.stream());
    const auto header = names({"omega", "f_hz", "psd"});
    w.header(header);
    for (int i = 0; i < o.points; ++i) {
        const double f = o.f_min + (o.f_max - o.f_min) * i / (o.points - 1);
        const double omega = 2.0 * 3.14159265358979323846 * f;
        const double s = gale::spectra::eval_psd(model, omega);
        const double row[3] = {omega, f, s};
        w.row(row);
    }
    sink.finish();
    return kExitOk;
}

// --- friction ----------------------------------------------------------------

int cmd_friction(const GlobalOpts& g, double u10, double ratio,
                 const std::string& closure, double eps, int max_iter) {
    if (!(ratio > 0.0)) {
        throw gale::ConfigError("c_p ratio must be positive");
    }
    if (ratio < 0.03 || ratio > 1.0) {
        std::cerr << "warning: c_p ratio " << ratio
                  << " is outside the realistic band [0.03, 1.0]\n";
    }
    gale::boundary_layer::SeaStateInput in{u10, ratio * u10,
                                           gale::boundary_layer::Closure::Volkov,
                                           eps, max_iter};
    if (closure == "charnock") {
        in.closure = gale::boundary_layer::Closure::Charnock;
    } else if (closure != "volkov") {
        throw gale::ConfigError("closure must be charnock or volkov");
    }
    const auto sol = gale::boundary_layer::solve_friction_velocity(in);

    Sink sink(g.out_path);
    std::ostream& os = sink.stream();
    os << "u_star = " << gale::csv::format(sol.u_star) << "\n";
    os << "z0 = " << gale::csv::format(sol.z0) << "\n";
    os << "C = " << gale::csv::format(sol.drag_coefficient) << "\n";
    os << "iterations = " << sol.iterations << "\n";
    os << "wave_age = " << gale::csv::format(sol.wave_age) << "\n";
    sink.finish();
    return kExitOk;
}

// --- timeseries / simulate helpers -------------------------------------------

std::vector<gale::Vec3> trajectory_positions(const gale::cli::VehicleSpec& v,
                                             const std::vector<double>& t_grid) {
    std::vector<gale::Vec3> out(t_grid.size(), v.position);
    if (v.trajectory_path.empty()) {
        return out;
    }
    std::ifstream f(v.trajectory_path);
    if (!f) {
        throw gale::IoError("cannot open trajectory file: " + v.trajectory_path);
    }
    std::vector<double> ts;
    std::vector<gale::Vec3> ps;
    std::string line;
    if (!std::getline(f, line) || line != "t,x,y,z") {
        throw gale::IoError("trajectory file must start with header t,x,y,z");
    }
    std::size_t line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream ss(line);
        double v4[4];
        std::string cell;
        for (int k = 0; k < 4; ++k) {
            if (!std::getline(ss, cell, ',')) {
                throw gale::IoError(v.trajectory_path + ":" +
                                    std::to_string(line_no) + ": expected t,x,y,z");
            }
            v4[k] = std::stod(cell);
        }
        ts.push_back(v4[0]);
        ps.push_back({v4[1], v4[2], v4[3]});
    }
    if (ps.empty()) {
        throw gale::IoError("trajectory file has no rows: " + v.trajectory_path);
    }
    // piecewise-linear interpolation, clamped at the ends
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        const double t = t_grid[k];
        if (t <= ts.front()) {
            out[k] = ps.front();
        } else if (t >= ts.back()) {
            out[k] = ps.back();
        } else {
            std::size_t hi = 1;
            while (ts[hi] < t) {
                ++hi;
            }
            const double w = (t - ts[hi - 1]) / (ts[hi] - ts[hi - 1]);
            for (int d = 0; d < 3; ++d) {
                out[k][d] = ps[hi - 1][d] + w * (ps[hi][d] - ps[hi - 1][d]);
            }
        }
    }
    return out;
}

std::vector<double> time_grid(const gale::cli::RunConfig& cfg) {
    const auto n = static_cast<std::size_t>(cfg.duration * cfg.sample_rate) + 1;
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = static_cast<double>(i) / cfg.sample_rate;
    }
    return t;
}

int cmd_timeseries(const GlobalOpts& g, gale::cli::RunConfig cfg) {
    if (cfg.vehicles.empty()) {
        cfg.vehicles.push_back({});
    }
    cfg.env.gust.horizon_s = std::max(cfg.env.gust.horizon_s, cfg.duration);
    const auto eng = gale::engine::WindEngine::build(cfg.env);
    const auto t_grid = time_grid(cfg);
    const auto pos = trajectory_positions(cfg.vehicles.front(), t_grid);

    const double cw = std::cos(cfg.env.theta_w);
    const double sw = std::sin(cfg.env.theta_w);

    Sink sink(g.out_path);
    gale::csv::Writer w(sink.stream());
    const auto header = names({"t", "v_lon", "v_lat", "v_vert", "om_roll",
                               "om_pitch", "om_yaw"});
    w.header(header);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const auto s = eng.sample(pos[i], t_grid[i]);
        // back into the wind frame
        const double v_lon = s.velocity[0] * cw + s.velocity[1] * sw;
        const double v_lat = -s.velocity[0] * sw + s.velocity[1] * cw;
        const double row[7] = {t_grid[i], v_lon,       v_lat,      s.velocity[2],
                               s.rates[0], s.rates[1], s.rates[2]};
        w.row(row);
    }
    sink.finish();
    return kExitOk;
}

int cmd_field(const GlobalOpts& g, gale::cli::RunConfig cfg, double t_snap,
              double z_snap, double extent, double spacing) {
    if (!(extent > 0.0) || !(spacing > 0.0) || spacing > extent) {
        throw gale::ConfigError("field extent and spacing must be positive with "
                                "spacing <= extent");
    }
    cfg.env.gust.enable = false; // turbulence snapshot only
    const auto eng = gale::engine::WindEngine::build(cfg.env);

    // Longitudinal turbulence scalar: mean removed, wind-frame component.
    const double cw = std::cos(cfg.env.theta_w);
    const double sw = std::sin(cfg.env.theta_w);

    Sink sink(g.out_path);
    gale::csv::Writer w(sink.stream());
    const auto header = names({"x", "y", "v_turb"});
    w.header(header);
    const int n = static_cast<int>(extent / spacing) + 1;
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const gale::Vec3 p{ix * spacing, iy * spacing, z_snap};
            const auto s = eng.sample(p, t_snap);
            const double v_lon = s.velocity[0] * cw + s.velocity[1] * sw;
            const double row[3] = {p[0], p[1], v_lon - cfg.env.v_air};
            w.row(row);
        }
    }
    sink.finish();
    return kExitOk;
}

int cmd_simulate(const GlobalOpts& g, gale::cli::RunConfig cfg) {
    if (cfg.vehicles.empty()) {
        throw gale::ConfigError("simulate needs at least one vehicle.* or "
                                "trajectory.* entry in the config");
    }
    if (g.out_path.empty()) {
        throw gale::ConfigError("simulate requires --out PREFIX for the trace files");
    }
    cfg.env.gust.horizon_s = std::max(cfg.env.gust.horizon_s, cfg.duration);
    const auto eng = gale::engine::WindEngine::build(cfg.env);
    const auto t_grid = time_grid(cfg);

    std::vector<std::vector<gale::Vec3>> tracks;
    tracks.reserve(cfg.vehicles.size());
    for (const auto& v : cfg.vehicles) {
        tracks.push_back(trajectory_positions(v, t_grid));
    }

    std::vector<std::unique_ptr<Sink>> sinks;
    std::vector<std::unique_ptr<gale::csv::Writer>> writers;
    const auto header = names({"t", "x", "y", "z", "vx", "vy", "vz", "om_roll",
                               "om_pitch", "om_yaw", "gust_active"});
    for (std::size_t v = 0; v < tracks.size(); ++v) {
        sinks.push_back(std::make_unique<Sink>(g.out_path + "_vehicle" +
                                               std::to_string(v) + ".csv"));
        writers.push_back(std::make_unique<gale::csv::Writer>(sinks[v]->stream()));
        writers[v]->header(header);
    }

    std::vector<gale::Vec3> positions(tracks.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        for (std::size_t v = 0; v < tracks.size(); ++v) {
            positions[v] = tracks[v][i];
        }
        const auto samples = eng.sample_many(positions, t_grid[i], g.threads);
        for (std::size_t v = 0; v < tracks.size(); ++v) {
            const auto& s = samples[v];
            const auto& p = positions[v];
            const double active = eng.gust_active(p, t_grid[i]) ? 1.0 : 0.0;
            const double row[11] = {t_grid[i],     p[0],          p[1],
                                    p[2],          s.velocity[0], s.velocity[1],
                                    s.velocity[2], s.rates[0],    s.rates[1],
                                    s.rates[2],    active};
            writers[v]->row(row);
        }
    }
    for (auto& s : sinks) {
        s->finish();
    }
    return kExitOk;
}

int cmd_gusts(const GlobalOpts& g, gale::cli::RunConfig cfg, double horizon,
              const std::string& import_path) {
    Sink sink(g.out_path);
    if (!import_path.empty()) {
        std::ifstream f(import_path);
        if (!f) {
            throw gale::IoError("cannot open schedule file: " + import_path);
        }
        const auto schedule = gale::gusts::read_schedule_csv(
            f, cfg.env.v_air, cfg.env.theta_w);
        gale::gusts::write_schedule_csv(sink.stream(), schedule);
        sink.finish();
        return kExitOk;
    }

    gale::gusts::ScheduleConfig sc;
    sc.rate_per_hour = cfg.env.gust.rate_per_hour;
    sc.l_x = cfg.env.gust.l_x;
    sc.l_y = cfg.env.gust.l_y;
    sc.centroid = cfg.env.gust.centroid;
    sc.upwind_offset = cfg.env.gust.upwind_offset;
    const double h = horizon > 0.0 ? horizon : cfg.env.gust.horizon_s;
    const auto schedule = gale::gusts::schedule_gusts(h, sc, cfg.env.v_air,
                                                      cfg.env.theta_w,
                                                      cfg.env.seed);
    gale::gusts::write_schedule_csv(sink.stream(), schedule);
    sink.finish();
    return kExitOk;
}

int cmd_validate(const GlobalOpts& g, const gale::cli::RunConfig& cfg) {
    gale::validation::Options opts;
    opts.seed = cfg.env.seed == 0 ? 1 : cfg.env.seed;
    const auto results = gale::validation::run_checks(opts);

    Sink sink(g.out_path);
    std::ostream& os = sink.stream();
    os << "check,status,observed,limit,note\n";
    for (const auto& r : results) {
        os << r.name << ',' << (r.pass ? "pass" : "FAIL") << ','
           << gale::csv::format(r.observed) << ',' << gale::csv::format(r.limit)
           << ',' << r.note << '\n';
    }
    const bool ok = gale::validation::all_pass(results);
    os << "overall," << (ok ? "pass" : "FAIL") << ",,,\n";
    sink.finish();
    return ok ? kExitOk : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gale - seeded spatio-temporal wind field generator"};
    app.require_subcommand(0, 1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "run configuration file");
    app.add_option("--seed", g.seed, "seed override (also: GALE_SEED env var)");
    app.add_option("--out", g.out_path, "output path (default: stdout)");
    app.add_option("--threads", g.threads, "worker threads for batch sampling");
    app.add_flag("--dump-config", g.dump_config,
                 "print the effective configuration and exit");

    auto* sp = app.add_subcommand("spectrum", "evaluate a PSD over a band");
    SpectrumOpts so;
    sp->add_option("--model", so.model,
                   "vk-lon|vk-lat|vk-vert|vk-roll|vk-pitch|vk-yaw|harris|"
                   "forristall|ochi-shin");
    sp->add_option("--u20", so.u20, "VK mean wind at 20 ft [m/s]");
    sp->add_option("--z", so.z, "altitude [m]");
    sp->add_option("--b", so.b, "wingspan [m]");
    sp->add_option("--u10", so.u10, "Harris mean wind at 10 m [m/s]");
    sp->add_option("--length", so.length, "Harris scaling length [m]");
    sp->add_option("--drag", so.drag, "Harris drag coefficient");
    sp->add_option("--uz", so.uz, "mean wind at z [m/s]");
    sp->add_option("--ustar", so.ustar, "friction velocity [m/s]");
    sp->add_option("--af", so.af, "Forristall A_f");
    sp->add_option("--bf", so.bf, "Forristall B_f");
    sp->add_option("--f-min", so.f_min, "band start [Hz]");
    sp->add_option("--f-max", so.f_max, "band end [Hz]");
    sp->add_option("--points", so.points, "number of rows");

    auto* fr = app.add_subcommand("friction", "solve the sea friction velocity");
    double fr_u10 = 10.0, fr_ratio = 0.5, fr_eps = 0.001;
    int fr_max_iter = 100;
    std::string fr_closure = "volkov";
    fr->add_option("--u10", fr_u10, "mean wind at 10 m [m/s]");
    fr->add_option("--cp-ratio", fr_ratio, "c_p / u10");
    fr->add_option("--closure", fr_closure, "charnock|volkov");
    fr->add_option("--eps", fr_eps, "convergence tolerance [m/s]");
    fr->add_option("--max-iter", fr_max_iter, "iteration cap");

    auto* ts = app.add_subcommand("timeseries",
                                  "sample the wind at the first vehicle");
    auto* fd = app.add_subcommand("field", "turbulence snapshot on a grid");
    double fd_t = 0.0, fd_z = 2.5, fd_extent = 100.0, fd_spacing = 1.0;
    fd->add_option("--t", fd_t, "snapshot time [s]");
    fd->add_option("--z", fd_z, "snapshot altitude [m]");
    fd->add_option("--extent", fd_extent, "square side length [m]");
    fd->add_option("--spacing", fd_spacing, "grid spacing [m]");

    auto* sim = app.add_subcommand("simulate", "per-vehicle wind traces");
    auto* gu = app.add_subcommand("gusts", "export or re-emit a gust schedule");
    double gu_horizon = 0.0;
    std::string gu_import;
    gu->add_option("--horizon", gu_horizon, "schedule horizon [s]");
    gu->add_option("--import", gu_import, "re-emit an existing schedule CSV");

    auto* va = app.add_subcommand("validate", "run the built-in check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (g.dump_config) {
            const auto cfg = load_config(g);
            Sink sink(g.out_path);
            cfg.dump(sink.stream());
            sink.finish();
            return kExitOk;
        }
        if (sp->parsed()) {
            (void)load_config(g); // surface config errors and warnings early
            return cmd_spectrum(g, so);
        }
        if (fr->parsed()) {
            return cmd_friction(g, fr_u10, fr_ratio, fr_closure, fr_eps,
                                fr_max_iter);
        }
        if (ts->parsed()) {
            return cmd_timeseries(g, load_config(g));
        }
        if (fd->parsed()) {
            gale::cli::RunConfig cfg;
            if (!g.config_path.empty()) {
                cfg = load_config(g);
            } else {
                // built-in over-water snapshot conditions
                cfg.env.terrain = gale::engine::Terrain::OverWater;
                cfg.env.v_air = 12.8;
                if (g.seed) {
                    cfg.env.seed = *g.seed;
                }
            }
            return cmd_field(g, cfg, fd_t, fd_z, fd_extent, fd_spacing);
        }
        if (sim->parsed()) {
            return cmd_simulate(g, load_config(g));
        }
        if (gu->parsed()) {
            return cmd_gusts(g, load_config(g), gu_horizon, gu_import);
        }
        if (va->parsed()) {
            return cmd_validate(g, load_config(g));
        }
        std::cerr << app.help();
        return kExitConfig;
    } catch (const gale::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const gale::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const gale::ConvergenceError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const gale::DomainError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
