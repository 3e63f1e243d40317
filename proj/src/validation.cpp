#include "gale/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gale/boundary_layer.hpp"
#include "gale/estimation.hpp"
#include "gale/field_synthesis.hpp"
#include "gale/gusts.hpp"
#include "gale/rng.hpp"
#include "gale/spectra.hpp"

namespace gale::validation {

namespace {

constexpr double kPi = std::numbers::pi;

double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double fa, double fm, double fb, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

CheckResult make(const std::string& name, bool pass, double observed,
                 double limit, const std::string& note = "") {
    return CheckResult{name, pass, observed, limit, note};
}

void check_spreading(std::vector<CheckResult>& out) {
    for (double s : {1.0, 2.0, 5.0, 10.0}) {
        const auto spec = field::SpreadingSpec::with_exponent(s);
        const double integral = integrate(
            [&spec](double th) { return field::spreading(th, spec); },
            -kPi / 2.0, kPi / 2.0, 1e-13);
        const double err = std::abs(integral - 1.0);
        out.push_back(make("spreading_norm_s" + std::to_string(int(s)),
                           err <= 1e-9, err, 1e-9));
    }
}

void check_friction(std::vector<CheckResult>& out) {
    const auto sol = boundary_layer::solve_friction_velocity(
        {10.0, 5.0, boundary_layer::Closure::Volkov});
    out.push_back(make("friction_volkov_ustar", std::abs(sol.u_star - 0.45) <= 0.01,
                       sol.u_star, 0.45, "u10=10, c_p=5"));
    out.push_back(make("friction_volkov_iterations", sol.iterations <= 20,
                       sol.iterations, 20));

    double max_residual = 0.0;
    for (double u10 : {2.0, 6.0, 10.0, 16.0, 25.0}) {
        for (double ratio : {0.03, 0.5, 1.0}) {
            for (auto closure : {boundary_layer::Closure::Charnock,
                                 boundary_layer::Closure::Volkov}) {
                const auto s = boundary_layer::solve_friction_velocity(
                    {u10, ratio * u10, closure});
                const double z0 = closure == boundary_layer::Closure::Charnock
                                      ? boundary_layer::charnock_roughness(s.u_star)
                                      : boundary_layer::volkov_roughness(
                                            s.u_star, ratio * u10);
                const double residual =
                    std::abs(s.u_star - 0.4 * u10 / std::log(10.0 / z0));
                max_residual = std::max(max_residual, residual);
            }
        }
    }
    out.push_back(make("friction_fixed_point_residual", max_residual <= 0.001,
                       max_residual, 0.001, "grid of u10 x c_p ratio x closure"));

    const auto charnock = boundary_layer::solve_friction_velocity(
        {10.0, 5.0, boundary_layer::Closure::Charnock});
    out.push_back(make("friction_volkov_rougher_than_charnock",
                       sol.z0 > charnock.z0, sol.z0, charnock.z0,
                       "z0 comparison at u10=10"));
}

void check_variance_recovery(std::vector<CheckResult>& out, const Options& opts) {
    const spectra::OchiShinParams os{10.0, 10.0, 0.45};
    const auto model = spectra::SpectrumModel::ochi_shin(os);

    const double expected =
        integrate([&model](double w) { return spectra::eval_psd(model, w); },
                  2.0 * kPi * 0.01, 2.0 * kPi * 0.1, 1e-9) +
        integrate([&model](double w) { return spectra::eval_psd(model, w); },
                  2.0 * kPi * 0.1, 2.0 * kPi * 8.0, 1e-9);

    // Emulates a synthesis built with sqrt(amplitude_factor * S dw dth)
    // instead of the shipped factor 2.
    const double tamper = std::sqrt(opts.amplitude_factor / 2.0);

    field::GridSpec grid;
    grid.n_freq = 1024;
    grid.m_angle = 3;
    const auto spread = field::SpreadingSpec::with_exponent(1.0);
    const Vec3 probe{7.0, -3.0, 10.0};

    const int n_t = static_cast<int>(opts.variance_duration_s *
                                     opts.variance_sample_rate);
    double sum_sq = 0.0;
    std::size_t count = 0;
    for (int s = 0; s < opts.variance_seeds; ++s) {
        grid.seed = opts.seed + static_cast<std::uint64_t>(s);
        const auto f = field::build_field(model, grid, spread, 0.0, 10.0);
        for (int k = 0; k < n_t; ++k) {
            const double v =
                tamper * f.sample(probe, k / opts.variance_sample_rate);
            sum_sq += v * v;
            ++count;
        }
    }
    const double variance = sum_sq / static_cast<double>(count);
    const double ratio = variance / expected;
    out.push_back(make("variance_recovery", std::abs(ratio - 1.0) <= 0.10, ratio,
                       0.10, "ensemble variance over band-integrated PSD"));
}

void check_psd_roundtrip(std::vector<CheckResult>& out, const Options& opts) {
    const auto model = spectra::SpectrumModel::von_karman(
        spectra::Family::VkLongitudinal,
        spectra::VonKarmanParams::from_si(6.0, 10.0, 0.34));

    const double fs = 20.0;
    const double duration = 500.0;
    const int n_samples = static_cast<int>(duration * fs);
    std::vector<double> t(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        t[i] = i / fs;
    }
    const auto series = field::synthesize_timeseries(model, t, 2048, opts.seed);
    const auto est = estimation::welch_psd(series, fs, 1024);

    double worst_ratio = 1.0;
    for (std::size_t k = 0; k < est.freq_hz.size(); ++k) {
        const double f = est.freq_hz[k];
        if (f < 0.2 || f > 3.0) {
            continue;
        }
        const double analytic = spectra::eval_psd_per_hz(model, f);
        const double ratio = est.psd[k] / analytic;
        worst_ratio = std::max(worst_ratio, std::max(ratio, 1.0 / ratio));
    }
    out.push_back(make("psd_roundtrip_pointwise", worst_ratio <= 2.0, worst_ratio,
                       2.0, "Welch vs analytic, 0.2-3 Hz"));

    const double band_est = est.band_power(0.2, 3.0);
    const double band_true =
        integrate([&model](double f) { return spectra::eval_psd_per_hz(model, f); },
                  0.2, 3.0, 1e-9);
    const double band_ratio = band_est / band_true;
    out.push_back(make("psd_roundtrip_band_power",
                       std::abs(band_ratio - 1.0) <= 0.15, band_ratio, 0.15));
}

void check_gusts(std::vector<CheckResult>& out, const Options& opts) {
    gusts::ScheduleConfig sc;
    const auto schedule =
        gusts::schedule_gusts(10.0 * 3600.0, sc, 10.0, 0.0, opts.seed);
    const double n = static_cast<double>(schedule.events.size());
    const double lam = 135.0;
    const double sigma = std::sqrt(lam);
    out.push_back(make("gust_count_10h",
                       n >= lam - 3.0 * sigma && n <= lam + 3.0 * sigma, n, lam,
                       "13.5/hr Poisson, +-3 sigma"));

    const auto long_run =
        gusts::schedule_gusts(320000.0, sc, 10.0, 0.0, opts.seed + 1);
    double mean_gap = 0.0;
    const std::size_t n_gaps = std::min<std::size_t>(1000, long_run.events.size() - 1);
    for (std::size_t i = 0; i < n_gaps; ++i) {
        mean_gap += long_run.events[i + 1].t_start - long_run.events[i].t_start;
    }
    mean_gap /= static_cast<double>(n_gaps);
    const double target = 3600.0 / 13.5;
    out.push_back(make("gust_interarrival_mean",
                       std::abs(mean_gap / target - 1.0) <= 0.05, mean_gap, target));

    double worst_jump = 0.0;
    double worst_edge = 0.0;
    for (int k = 0; k < 500; ++k) {
        const double g1 = 0.5 + 15.0 * rng::uniform(opts.seed, 900, k, 0);
        const double t1 = 0.5 + 20.0 * rng::uniform(opts.seed, 900, k, 1);
        const double t2 = 0.5 + 20.0 * rng::uniform(opts.seed, 900, k, 2);
        const double th = 8.0 * rng::uniform(opts.seed, 900, k, 3);
        const double g4 = 0.5 + 7.5 * rng::uniform(opts.seed, 900, k, 4);
        const double g5 = 0.5 + 7.5 * rng::uniform(opts.seed, 900, k, 5);
        const auto p = gusts::GustShapeParams::create(g1, t1, t2, th, 6.0, g4, g5);
        const double eps = 1e-9;
        const double joints[2] = {0.5 * t1, 0.5 * t1 + th};
        for (double joint : joints) {
            const double jump = std::abs(gusts::gust_shape(joint - eps * t1, p) -
                                         gusts::gust_shape(joint + eps * t2, p));
            worst_jump = std::max(worst_jump, jump / g1);
        }
        // The 1% boundary claim is tied to the g3 = 6 cutoff, which covers
        // dip factors up to ~4.4; check edges in that range.
        const auto pe = gusts::GustShapeParams::create(
            g1, t1, t2, th, 6.0, std::min(g4, 4.0), std::min(g5, 4.0));
        worst_edge = std::max(
            worst_edge, std::abs(gusts::gust_shape(1e-9 * t1, pe)) / g1);
        worst_edge = std::max(
            worst_edge,
            std::abs(gusts::gust_shape(pe.support_end() * (1.0 - 1e-12), pe)) / g1);
    }
    out.push_back(make("gust_shape_continuity", worst_jump <= 1e-6, worst_jump,
                       1e-6, "randomized joints, relative to g1"));
    out.push_back(make("gust_shape_edges", worst_edge <= 0.01, worst_edge, 0.01,
                       "support edges within 1% of zero"));
}

void check_os_branches(std::vector<CheckResult>& out) {
    const double fs = 0.003;
    const double low = 583.0 * fs;
    const double mid = 420.0 * std::pow(fs, 0.7) /
                       std::pow(1.0 + std::pow(fs, 0.35), 11.5);
    const double rel = std::abs(low - mid) / low;
    out.push_back(make("ochi_shin_branch_continuity", rel <= 1e-3, rel, 1e-3,
                       "printed branches at f* = 0.003"));
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    return adaptive(f, a, b, fa, fm, fb, simpson(f, a, b, fa, fm, fb), tol, 48);
}

std::vector<CheckResult> run_checks(const Options& opts) {
    std::vector<CheckResult> out;
    check_spreading(out);
    check_friction(out);
    check_os_branches(out);
    check_gusts(out, opts);
    check_variance_recovery(out, opts);
    check_psd_roundtrip(out, opts);
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace gale::validation
