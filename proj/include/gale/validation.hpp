// Built-in self checks surfaced through the `validate` subcommand: spreading
// normalization, synthesis variance recovery, PSD round trip through the
// Welch estimator, friction-velocity reproduction, and gust statistics.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gale::validation {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    double limit = 0.0; ///< acceptance bound the observation is held to
    std::string note;
};

struct Options {
    std::uint64_t seed = 1;
    /// Superposition amplitude convention under test; the shipped convention
    /// is 2 (sample variance reproduces the band-integrated PSD). Checks
    /// rescale their measurements as if this factor had been used, so a
    /// deliberately wrong value must fail the variance check.
    double amplitude_factor = 2.0;
    int variance_seeds = 60;
    double variance_duration_s = 60.0;
    double variance_sample_rate = 25.0;
};

/// Adaptive Simpson quadrature to the requested absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

std::vector<CheckResult> run_checks(const Options& opts);

bool all_pass(const std::vector<CheckResult>& results);

} // namespace gale::validation
