#include <cmath>
#include <numbers>

#include <doctest.h>

#include "gale/errors.hpp"
#include "gale/spectra.hpp"
#include "oracles.hpp"

using namespace gale;
using namespace gale::spectra;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("vk scaling lengths") {
    SUBCASE("z = 1000 ft collapses the denominator to 1") {
        const auto l = vk_scaling_lengths(1000.0);
        CHECK(l.l_u == doctest::Approx(1000.0).epsilon(1e-12));
        CHECK(l.l_w == 1000.0);
        CHECK(l.l_v == l.l_u);
    }
    SUBCASE("closed form at z = 32.8 ft") {
        // oracle: high-precision evaluation of z / (0.177 + 0.000823 z)^1.2
        const auto l = vk_scaling_lengths(32.8);
        CHECK(l.l_u == doctest::Approx(220.96930471616088).epsilon(1e-13));
        CHECK(l.l_v == l.l_u);
        CHECK(l.l_w == 32.8);
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(vk_scaling_lengths(0.0), DomainError);
        CHECK_THROWS_AS(vk_scaling_lengths(-5.0), DomainError);
    }
}

TEST_CASE("vk intensities") {
    SUBCASE("denominator = 1 at z = 1000 ft") {
        const auto s = vk_intensities(20.0, 1000.0);
        CHECK(s.sigma_w == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(s.sigma_u == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(s.sigma_v == s.sigma_u);
    }
    SUBCASE("sigma_w is a direct product") {
        const auto s = vk_intensities(19.7, 32.8);
        CHECK(s.sigma_w == doctest::Approx(1.97).epsilon(1e-15));
        // oracle: 1.97 / (0.177 + 0.000823 * 32.8)^0.4
        CHECK(s.sigma_u == doctest::Approx(3.7206509418596006).epsilon(1e-13));
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(vk_intensities(0.0, 10.0), DomainError);
        CHECK_THROWS_AS(vk_intensities(10.0, 0.0), DomainError);
    }
}

TEST_CASE("von karman evaluation against reference forms") {
    const auto params = VonKarmanParams::from_si(6.0, 10.0, 0.34);
    const oracle::VkRef ref{6.0 * kFeetPerMeter, 10.0 * kFeetPerMeter,
                            0.34 * kFeetPerMeter};
    const double ft2 = kFeetPerMeter * kFeetPerMeter;

    for (double omega : {0.1, 0.5, 1.0, 3.0, 10.0, 40.0}) {
        const auto lon = SpectrumModel::von_karman(Family::VkLongitudinal, params);
        const auto lat = SpectrumModel::von_karman(Family::VkLateral, params);
        const auto vert = SpectrumModel::von_karman(Family::VkVertical, params);
        const auto roll = SpectrumModel::von_karman(Family::VkRoll, params);
        const auto pitch = SpectrumModel::von_karman(Family::VkPitch, params);
        const auto yaw = SpectrumModel::von_karman(Family::VkYaw, params);

        CHECK(eval_psd(lon, omega) ==
              doctest::Approx(ref.phi_u(omega) / ft2).epsilon(1e-12));
        CHECK(eval_psd(lat, omega) ==
              doctest::Approx(ref.phi_v(omega) / ft2).epsilon(1e-12));
        CHECK(eval_psd(vert, omega) ==
              doctest::Approx(ref.phi_w(omega) / ft2).epsilon(1e-12));
        CHECK(eval_psd(roll, omega) ==
              doctest::Approx(ref.phi_p(omega)).epsilon(1e-12));
        CHECK(eval_psd(pitch, omega) ==
              doctest::Approx(ref.phi_q(omega)).epsilon(1e-12));
        CHECK(eval_psd(yaw, omega) ==
              doctest::Approx(ref.phi_r(omega)).epsilon(1e-12));
    }
}

TEST_CASE("von karman longitudinal integrates to sigma_u^2") {
    const auto params = VonKarmanParams::from_si(6.0, 10.0, 0.34);
    const auto model = SpectrumModel::von_karman(Family::VkLongitudinal, params);
    const auto s = vk_intensities(params.u20, params.z);
    const double sigma2_si =
        s.sigma_u * s.sigma_u / (kFeetPerMeter * kFeetPerMeter);

    double integral = 0.0;
    double lo = 1e-4;
    // panel edges grow geometrically to cover the long -5/3 tail
    for (double hi = 1e-3; hi <= 1e6; hi *= 10.0) {
        integral += oracle::integrate(
            [&model](double w) { return eval_psd(model, w); }, lo, hi, 1e-12);
        lo = hi;
    }
    CHECK(integral == doctest::Approx(sigma2_si).epsilon(0.02));
    // the convention is much tighter than the 2% gate
    CHECK(integral == doctest::Approx(sigma2_si).epsilon(1e-3));
}

TEST_CASE("harris model") {
    HarrisParams p{10.0, 60.0, 0.002};
    const auto model = SpectrumModel::harris(p);

    SUBCASE("non-dimensional frequency at f = 1 Hz is 6") {
        // oracle: direct per-Hz formula with f*_h = f L / u10 = 6
        const double fs = 1.0 * 60.0 / 10.0;
        CHECK(fs == 6.0);
        const double per_hz =
            4.0 * 0.002 * 100.0 * fs / (1.0 * std::pow(2.0 + fs * fs, 5.0 / 6.0));
        CHECK(eval_psd_per_hz(model, 1.0) == doctest::Approx(per_hz).epsilon(1e-14));
        CHECK(eval_psd(model, kTwoPi) ==
              doctest::Approx(per_hz / kTwoPi).epsilon(1e-14));
    }
    SUBCASE("strictly positive over the band") {
        for (double f = 0.01; f <= 8.0; f += 0.37) {
            CHECK(eval_psd_per_hz(model, f) > 0.0);
        }
    }
    SUBCASE("frozen value") {
        CHECK(eval_psd_per_hz(model, 1.0) ==
              doctest::Approx(0.23160872023422925).epsilon(1e-13));
    }
}

TEST_CASE("forristall model") {
    ForristallParams p{42.0, 63.0, 10.0, 10.0, 0.45};
    const auto model = SpectrumModel::forristall(p);

    SUBCASE("non-dimensional frequency at f = 1, z = 10, u = 10 is 1") {
        const double fs = 1.0 * 10.0 / 10.0;
        CHECK(fs == 1.0);
        const double sigma = 1.92 * 0.45;
        const double per_hz = 42.0 * fs * sigma * sigma /
                              (1.0 * std::pow(1.0 + 63.0 * fs, 5.0 / 3.0));
        CHECK(eval_psd_per_hz(model, 1.0) == doctest::Approx(per_hz).epsilon(1e-14));
    }
    SUBCASE("frozen value") {
        CHECK(eval_psd_per_hz(model, 1.0) ==
              doctest::Approx(0.030618).epsilon(1e-12));
    }
    SUBCASE("missing friction velocity is a configuration error") {
        ForristallParams bad = p;
        bad.u_star = 0.0;
        CHECK_THROWS_AS(SpectrumModel::forristall(bad), ConfigError);
    }
}

TEST_CASE("ochi-shin model") {
    OchiShinParams p{10.0, 10.0, 0.45};
    const auto model = SpectrumModel::ochi_shin(p);

    SUBCASE("branch agreement at f* = 0.003") {
        // oracle: evaluate both printed branch formulas
        const double fs = 0.003;
        const double low = 583.0 * fs;
        const double mid = 420.0 * std::pow(fs, 0.7) /
                           std::pow(1.0 + std::pow(fs, 0.35), 11.5);
        CHECK(low == doctest::Approx(1.749).epsilon(1e-12));
        CHECK(std::abs(low - mid) / low < 1e-3);
    }
    SUBCASE("printed discontinuity at f* = 0.1") {
        // oracle: both branch formulas straddling the boundary
        const double fs = 0.1;
        const double mid = 420.0 * std::pow(fs, 0.7) /
                           std::pow(1.0 + std::pow(fs, 0.35), 11.5);
        const double high = 838.0 * fs / std::pow(1.0 + std::pow(fs, 0.3), 11.5);
        CHECK(mid / high == doctest::Approx(1.5300664678).epsilon(1e-9));
        // implementation takes the middle branch at the boundary itself
        // (f = f* here because z/u_z = 1)
        const double at = eval_psd_per_hz(model, 0.1);
        CHECK(at == doctest::Approx(mid * 0.45 * 0.45 / 0.1).epsilon(1e-12));
        const double above = eval_psd_per_hz(model, 0.1 * (1.0 + 1e-9));
        CHECK(above < 0.7 * at);
    }
    SUBCASE("frozen full evaluation") {
        CHECK(eval_psd_per_hz(model, 1.0) ==
              doctest::Approx(0.058590080680396085).epsilon(1e-13));
    }
    SUBCASE("scale multiplies") {
        auto scaled = model;
        scaled.scale = 0.25;
        CHECK(eval_psd(scaled, 1.0) ==
              doctest::Approx(0.25 * eval_psd(model, 1.0)).epsilon(1e-15));
    }
}

TEST_CASE("canonical units: per-Hz and per-rad/s agree exactly") {
    const auto os = SpectrumModel::ochi_shin({10.0, 10.0, 0.45});
    const auto harris = SpectrumModel::harris({10.0, 60.0, 0.002});
    for (double f : {0.03125, 0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double omega = kTwoPi * f;
        CHECK(eval_psd(os, omega) == eval_psd_per_hz(os, omega / kTwoPi) / kTwoPi);
        CHECK(eval_psd(harris, omega) ==
              eval_psd_per_hz(harris, omega / kTwoPi) / kTwoPi);
    }
}

TEST_CASE("psd values are non-negative across families and the band") {
    const auto vk = VonKarmanParams::from_si(6.0, 10.0, 0.34);
    const SpectrumModel models[] = {
        SpectrumModel::von_karman(Family::VkLongitudinal, vk),
        SpectrumModel::von_karman(Family::VkLateral, vk),
        SpectrumModel::von_karman(Family::VkVertical, vk),
        SpectrumModel::von_karman(Family::VkRoll, vk),
        SpectrumModel::von_karman(Family::VkPitch, vk),
        SpectrumModel::von_karman(Family::VkYaw, vk),
        SpectrumModel::harris({10.0, 60.0, 0.002}),
        SpectrumModel::forristall({42.0, 63.0, 10.0, 10.0, 0.45}),
        SpectrumModel::ochi_shin({10.0, 10.0, 0.45}),
    };
    for (const auto& m : models) {
        for (double omega = kBandMinRad; omega <= kBandMaxRad; omega *= 1.37) {
            CHECK(eval_psd(m, omega) >= 0.0);
        }
    }
}

TEST_CASE("eval_psd domain errors") {
    const auto model = SpectrumModel::ochi_shin({10.0, 10.0, 0.45});
    CHECK_THROWS_AS(eval_psd(model, 0.0), DomainError);
    CHECK_THROWS_AS(eval_psd(model, -1.0), DomainError);
    CHECK(in_validated_band(1.0));
    CHECK_FALSE(in_validated_band(2.0 * std::numbers::pi * 9.0));
}

TEST_CASE("ochi-shin component ratios") {
    SUBCASE("lateral ratio tends to 1/2 at low frequency") {
        const double r =
            os_component_ratio(Component::Lateral, 6.0, 10.0, 0.34, 1e-9);
        CHECK(r == doctest::Approx(0.5).epsilon(1e-9));
    }
    SUBCASE("vertical ratio is 1/2 at z = 1000 ft as omega -> 0") {
        const double z_m = 1000.0 / kFeetPerMeter;
        const double r =
            os_component_ratio(Component::Vertical, 6.0, z_m, 0.34, 1e-9);
        CHECK(r == doctest::Approx(0.5).epsilon(1e-9));
    }
    SUBCASE("pitch ratio at the worked conditions") {
        // oracle: direct quotient of the tabulated forms
        const oracle::VkRef ref{6.0 * kFeetPerMeter, 10.0 * kFeetPerMeter,
                                0.34 * kFeetPerMeter};
        const double w = kTwoPi;
        const double expected = ref.phi_q(w) / ref.phi_u(w);
        const double r = os_component_ratio(Component::Pitch, 6.0, 10.0, 0.34, w);
        CHECK(r > 0.0);
        CHECK(r == doctest::Approx(expected).epsilon(1e-12));
        CHECK(r == doctest::Approx(0.11186222357302665).epsilon(1e-10));
    }
    SUBCASE("longitudinal is the identity") {
        CHECK(os_component_ratio(Component::Longitudinal, 6.0, 10.0, 0.34, 1.0) ==
              1.0);
    }
    SUBCASE("ratio-scaled model evaluates the product") {
        const OchiShinParams os{10.0, 10.0, 0.45};
        const auto vk = VonKarmanParams::from_si(6.0, 10.0, 0.34);
        const auto scaled =
            SpectrumModel::ochi_shin_component(Component::Vertical, os, vk);
        const auto base = SpectrumModel::ochi_shin(os);
        for (double w : {0.5, 1.0, 4.0}) {
            const double ratio =
                os_component_ratio(Component::Vertical, 6.0, 10.0, 0.34, w);
            CHECK(eval_psd(scaled, w) ==
                  doctest::Approx(eval_psd(base, w) * ratio).epsilon(1e-12));
        }
    }
}

TEST_CASE("von karman parameter invariants") {
    CHECK_THROWS_AS(VonKarmanParams::from_si(6.0, 620.0, 0.34), DomainError);
    CHECK_THROWS_AS(VonKarmanParams::from_si(-1.0, 10.0, 0.34), DomainError);
    CHECK_THROWS_AS(VonKarmanParams::from_si(6.0, 10.0, 0.0), DomainError);
}
