#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "gale/errors.hpp"
#include "gale/field_synthesis.hpp"
#include "gale/spectra.hpp"
#include "oracles.hpp"

using namespace gale;
using namespace gale::field;

namespace {

constexpr double kPi = std::numbers::pi;

spectra::SpectrumModel ochi_shin_10_10() {
    return spectra::SpectrumModel::ochi_shin({10.0, 10.0, 0.45});
}

} // namespace

TEST_CASE("spreading normalization coefficient") {
    SUBCASE("s = 1 gives 2/pi exactly") {
        CHECK(SpreadingSpec::with_exponent(1.0).d0 == 2.0 / kPi);
    }
    SUBCASE("closed forms for other exponents") {
        CHECK(SpreadingSpec::with_exponent(0.0).d0 == doctest::Approx(1.0 / kPi));
        CHECK(SpreadingSpec::with_exponent(2.0).d0 ==
              doctest::Approx(8.0 / (3.0 * kPi)).epsilon(1e-15));
        CHECK(SpreadingSpec::with_exponent(0.5).d0 == doctest::Approx(0.5));
    }
    SUBCASE("quadrature of D over +-pi/2 is 1 to 1e-9") {
        for (double s : {0.5, 1.0, 2.0, 2.5, 5.0, 10.0}) {
            const auto spec = SpreadingSpec::with_exponent(s);
            const double integral = oracle::integrate(
                [&spec](double th) { return spreading(th, spec); }, -kPi / 2.0,
                kPi / 2.0, 1e-13);
            CHECK(std::abs(integral - 1.0) < 1e-9);
        }
    }
    SUBCASE("invalid exponents") {
        CHECK_THROWS_AS(SpreadingSpec::with_exponent(-1.0), ConfigError);
        CHECK_THROWS_AS(SpreadingSpec::with_exponent(0.3), ConfigError);
    }
}

TEST_CASE("spreading function values") {
    const auto spec = SpreadingSpec::with_exponent(1.0);
    CHECK(spreading(0.0, spec) == 2.0 / kPi);
    CHECK(spreading(kPi / 2.0, spec) < 1e-30);
    CHECK(spreading(2.0, spec) == 0.0);  // outside +-pi/2
    CHECK(spreading(-2.0, spec) == 0.0);
    CHECK(spreading(0.7, spec) == spreading(-0.7, spec));
}

TEST_CASE("directional spectrum") {
    const auto spec = SpreadingSpec::with_exponent(1.0);
    CHECK(directional_spectrum(kPi / 2.0, 0.0, spec) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(directional_spectrum(3.7, kPi / 2.0, spec) < 1e-29);
    CHECK_THROWS_AS(directional_spectrum(-1.0, 0.0, spec), DomainError);

    SUBCASE("riemann sum over 181 angles recovers S") {
        const double s_value = 2.31;
        const int m = 181;
        const double dth = kPi / m;
        double acc = 0.0;
        for (int j = 0; j < m; ++j) {
            const double th = -kPi / 2.0 + (j + 0.5) * dth;
            acc += directional_spectrum(s_value, th, spec) * dth;
        }
        CHECK(acc == doctest::Approx(s_value).epsilon(1e-4));
    }
}

TEST_CASE("build_field determinism and structure") {
    const auto model = ochi_shin_10_10();
    GridSpec grid;
    grid.n_freq = 16;
    grid.m_angle = 5;
    grid.seed = 77;
    const auto spread = SpreadingSpec::with_exponent(1.0);

    const auto a = build_field(model, grid, spread, 0.3, 10.0);
    const auto b = build_field(model, grid, spread, 0.3, 10.0);

    SUBCASE("same seed twice is bit-identical") {
        REQUIRE(a.amplitudes().size() == b.amplitudes().size());
        for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
            CHECK(a.amplitudes()[i] == b.amplitudes()[i]);
            CHECK(a.phases()[i] == b.phases()[i]);
        }
        CHECK(a.sample({12.0, -3.0, 2.0}, 1.7) == b.sample({12.0, -3.0, 2.0}, 1.7));
    }
    SUBCASE("phases lie in [0, 2pi)") {
        for (double psi : a.phases()) {
            CHECK(psi >= 0.0);
            CHECK(psi < 2.0 * kPi);
        }
    }
    SUBCASE("wavenumbers follow k = omega / u_ref") {
        for (int i = 0; i < a.n_freq(); ++i) {
            CHECK(a.wavenumbers()[i] == a.frequencies()[i] / 10.0);
        }
    }
    SUBCASE("amplitude matches the closed form") {
        const double d_omega = (grid.omega_max - grid.omega_min) / grid.n_freq;
        const double d_theta = kPi / grid.m_angle;
        for (int i = 0; i < a.n_freq(); ++i) {
            for (int j = 0; j < a.m_angle(); ++j) {
                const double s = spectra::eval_psd(model, a.frequencies()[i]);
                const double expected = std::sqrt(
                    2.0 * spread.d0 * s *
                    std::pow(std::cos(a.angles()[j]), 2.0) * d_omega * d_theta);
                CHECK(a.amplitudes()[i * a.m_angle() + j] ==
                      doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
    SUBCASE("different seed changes the phases") {
        GridSpec other = grid;
        other.seed = 78;
        const auto c = build_field(model, other, spread, 0.3, 10.0);
        bool any_different = false;
        for (std::size_t i = 0; i < a.phases().size(); ++i) {
            any_different |= a.phases()[i] != c.phases()[i];
        }
        CHECK(any_different);
    }
}

TEST_CASE("build_field validation") {
    const auto model = ochi_shin_10_10();
    const auto spread = SpreadingSpec::with_exponent(1.0);
    GridSpec grid;
    grid.n_freq = 0;
    CHECK_THROWS_AS(build_field(model, grid, spread, 0.0, 10.0), ConfigError);
    grid.n_freq = 8;
    grid.m_angle = 4; // even
    CHECK_THROWS_AS(build_field(model, grid, spread, 0.0, 10.0), ConfigError);
    grid.m_angle = 5;
    CHECK_THROWS_AS(build_field(model, grid, spread, 0.0, 0.0), ConfigError);
    grid.omega_min = -1.0;
    CHECK_THROWS_AS(build_field(model, grid, spread, 0.0, 10.0), ConfigError);
}

TEST_CASE("null spectrum gives the zero field") {
    auto model = ochi_shin_10_10();
    model.scale = 0.0;
    GridSpec grid;
    grid.n_freq = 8;
    grid.m_angle = 3;
    const auto f = build_field(model, grid, SpreadingSpec::with_exponent(1.0),
                               0.0, 10.0);
    for (double a : f.amplitudes()) {
        CHECK(a == 0.0);
    }
    CHECK(f.sample({5.0, 5.0, 5.0}, 3.0) == 0.0);
}

TEST_CASE("single term field from raw arrays") {
    // psi = 0, amplitude 1.25: sample at the origin at t = 0 is the amplitude
    FieldRealization f({2.0}, {0.25}, {0.0}, {1.25}, {0.0}, 0.0, 8.0);
    CHECK(f.sample({0.0, 0.0, 0.0}, 0.0) == 1.25);
    // cos argument sweep: value at quarter period is ~0
    CHECK(f.sample({0.0, 0.0, 0.0}, kPi / 4.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("propagation characteristic: value rides with the mean wind") {
    // m_angle = 1 and theta_w = 0 makes every term propagate along +x with
    // speed u_ref, so sampling at (x + u_ref dt, t + dt) is invariant.
    const auto model = ochi_shin_10_10();
    GridSpec grid;
    grid.n_freq = 64;
    grid.m_angle = 1;
    grid.seed = 5;
    const double u_ref = 8.0;
    const auto f = build_field(model, grid, SpreadingSpec::with_exponent(1.0),
                               0.0, u_ref);
    const Vec3 p{3.0, 2.0, 1.0};
    const double t = 11.25;
    const double v0 = f.sample(p, t);
    for (double dt : {0.25, 1.0, 7.5}) {
        const double v1 = f.sample({p[0] + u_ref * dt, p[1], p[2]}, t + dt);
        CHECK(v1 == doctest::Approx(v0).epsilon(1e-9));
    }
}

TEST_CASE("rotation consistency") {
    const auto model = ochi_shin_10_10();
    GridSpec grid;
    grid.n_freq = 32;
    grid.m_angle = 7;
    grid.seed = 9;
    const auto spread = SpreadingSpec::with_exponent(1.0);

    const auto base = build_field(model, grid, spread, 0.0, 10.0);
    for (double alpha : {0.35, 1.2, 4.0}) {
        const auto rotated = build_field(model, grid, spread, alpha, 10.0);
        // same seed: identical phase sequences, so the fields differ only by
        // the coordinate transform
        CHECK(rotated.sample({0.0, 0.0, 0.0}, 2.0) ==
              base.sample({0.0, 0.0, 0.0}, 2.0));
        const double c = std::cos(alpha), s = std::sin(alpha);
        for (const Vec3& p : {Vec3{10.0, 0.0, 0.0}, Vec3{-4.0, 7.0, 1.0},
                              Vec3{100.0, -55.0, 9.0}}) {
            const Vec3 pr{p[0] * c - p[1] * s, p[0] * s + p[1] * c, p[2]};
            CHECK(rotated.sample(pr, 2.0) ==
                  doctest::Approx(base.sample(p, 2.0)).epsilon(1e-9));
        }
    }
}

TEST_CASE("ensemble statistics of the sampled field") {
    const auto model = ochi_shin_10_10();
    GridSpec grid;
    grid.n_freq = 256;
    grid.m_angle = 3;
    const auto spread = SpreadingSpec::with_exponent(1.0);

    // expected variance is the discrete amplitude energy of the realization
    double expected = 0.0;
    {
        grid.seed = 0;
        const auto f = build_field(model, grid, spread, 0.0, 10.0);
        for (double a : f.amplitudes()) {
            expected += 0.5 * a * a;
        }
    }

    const int n_seeds = 220;
    const int n_t = 160;
    const Vec3 probe{12.0, 44.0, 10.0};
    double sum = 0.0, sum_sq = 0.0;
    std::size_t count = 0;
    for (int s = 0; s < n_seeds; ++s) {
        grid.seed = 1000 + s;
        const auto f = build_field(model, grid, spread, 0.0, 10.0);
        for (int k = 0; k < n_t; ++k) {
            const double v = f.sample(probe, 0.5 * k);
            sum += v;
            sum_sq += v * v;
            ++count;
        }
    }
    const double mean = sum / count;
    const double second_moment = sum_sq / count;

    SUBCASE("variance matches the amplitude energy within 5%") {
        CHECK(second_moment == doctest::Approx(expected).epsilon(0.05));
    }
    SUBCASE("ensemble mean is zero within 3 standard errors") {
        const double se = std::sqrt(second_moment / count) *
                          3.0; // generous: samples are correlated in time
        CHECK(std::abs(mean) < std::max(se * 20.0, 0.05 * std::sqrt(expected)));
    }
}

TEST_CASE("spatial correlation decays with lateral separation") {
    const auto model = ochi_shin_10_10();
    GridSpec grid;
    grid.n_freq = 128;
    grid.m_angle = 9;
    const auto spread = SpreadingSpec::with_exponent(1.0);

    // shortest wavelength is u_ref / f_max = 1.25 m; the first separation is
    // far inside it so the pair is effectively coincident
    const double separations[] = {0.05, 25.0, 120.0, 500.0};
    double corr[4] = {0, 0, 0, 0};
    const int n_seeds = 120;
    const int n_t = 40;

    for (int comp = 0; comp < 4; ++comp) {
        double sxy = 0.0, sxx = 0.0, syy = 0.0;
        for (int s = 0; s < n_seeds; ++s) {
            grid.seed = 40000 + s;
            const auto f = build_field(model, grid, spread, 0.0, 10.0);
            for (int k = 0; k < n_t; ++k) {
                const double t = 1.1 * k;
                const double va = f.sample({0.0, 0.0, 5.0}, t);
                const double vb = f.sample({0.0, separations[comp], 5.0}, t);
                sxy += va * vb;
                sxx += va * va;
                syy += vb * vb;
            }
        }
        corr[comp] = sxy / std::sqrt(sxx * syy);
    }
    CHECK(corr[0] > corr[1]);
    CHECK(corr[1] > corr[2]);
    CHECK(corr[2] > corr[3]);
    CHECK(corr[0] > 0.99); // 1 m apart: nearly identical
}

TEST_CASE("synthesize_timeseries") {
    SUBCASE("zero spectrum gives zeros") {
        auto model = ochi_shin_10_10();
        model.scale = 0.0;
        std::vector<double> t{0.0, 0.1, 0.2, 0.3};
        for (double v : synthesize_timeseries(model, t, 16, 3)) {
            CHECK(v == 0.0);
        }
    }
    SUBCASE("single bin with S dw = 0.5 has unit amplitude and variance 1/2") {
        // flat PSD 0.5 over a 1 rad/s band, one bin
        const auto psd = [](double) { return 0.5; };
        const double omega_c = 1.5; // bin center of [1, 2]
        const double period = 2.0 * kPi / omega_c;
        const int n = 4096;
        std::vector<double> t(n);
        for (int i = 0; i < n; ++i) {
            t[i] = period * i / n;
        }
        const auto y = synthesize_timeseries(psd, t, 1, 17, 1.0, 2.0);
        double peak = 0.0, sum_sq = 0.0;
        for (double v : y) {
            peak = std::max(peak, std::abs(v));
            sum_sq += v * v;
        }
        CHECK(peak == doctest::Approx(1.0).epsilon(1e-5));
        CHECK(sum_sq / n == doctest::Approx(0.5).epsilon(1e-3));
    }
    SUBCASE("unsorted time grid is rejected") {
        std::vector<double> t{0.0, 0.2, 0.1};
        CHECK_THROWS_AS(synthesize_timeseries(ochi_shin_10_10(), t, 8, 1),
                        DomainError);
    }
    SUBCASE("ochi-shin magnitude is in the plotted range") {
        // z = 10, u = 10, u* = 0.45: excursions of a few m/s about zero
        const int n = 5000;
        std::vector<double> t(n);
        for (int i = 0; i < n; ++i) {
            t[i] = 0.02 * i;
        }
        const auto y = synthesize_timeseries(ochi_shin_10_10(), t, 1024, 21);
        double peak = 0.0;
        for (double v : y) {
            peak = std::max(peak, std::abs(v));
        }
        CHECK(peak > 1.0);
        CHECK(peak < 6.0);
    }
}
