// Copyright 2026 catsense developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace catsense::sweep {

/// Inclusive linear range; count == 1 pins the single value min.
struct AxisSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 1;

    static AxisSpec fixed(double value) { return {value, value, 1}; }
    std::vector<double> values() const;
};

enum class Quantity : int {
    pg_exact = 0,
    pg_approx = 1,
    pg_paper_literal = 2,
    pg_oracle = 3,
    snr = 4,
};

inline constexpr int quantity_count = 5;

const char *quantity_name(Quantity q);
std::optional<Quantity> quantity_from_name(const std::string &name);

struct SweepSpec {
    AxisSpec d_axis = AxisSpec::fixed(50.0);
    AxisSpec theta_axis = AxisSpec::fixed(0.0);
    /// Pins theta to pi/(2 D) per D column; theta_axis is ignored.
    bool bias_mode = false;
    AxisSpec kappa_t_axis = AxisSpec::fixed(0.0);
    std::array<bool, quantity_count> quantities{};
    /// Largest D for which the pg_oracle quantity may be requested.
    double oracle_ceiling = 100.0;
    int threads = 0;
    std::string title;

    void enable(Quantity q) { quantities[static_cast<int>(q)] = true; }
    bool enabled(Quantity q) const { return quantities[static_cast<int>(q)]; }
};

/// Dense row-major grid of evaluated quantities plus reproducibility metadata.
struct SweepResult {
    SweepSpec spec;
    std::vector<double> d;
    std::vector<double> theta;
    std::vector<double> kappa_t;
    std::array<std::vector<double>, quantity_count> columns; // empty when not requested
    std::uint64_t spec_hash = 0;

    std::size_t rows() const { return d.size(); }
    /// Number of grid axes with more than one value (bias mode removes theta).
    int varying_axes() const;
};

std::uint64_t hash_spec(const SweepSpec &spec);

/// Evaluates every requested quantity on the full grid. Deterministic for a
/// given spec; throws rather than emitting partial results.
SweepResult sweep(const SweepSpec &spec);

/// R at the bias point theta0(D) along a D range, at fixed kappa_t.
SweepResult snr_curve(const AxisSpec &d_axis, double kappa_t);

struct OptimumReport {
    double kappa_t = 0.0;
    double d_star = 0.0;
    double r_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double tolerance = 0.1;
};

/// Coarse-grid argmax of R(D) at bias followed by golden-section refinement
/// to |delta D| <= 0.1. Throws no_interior_maximum when the coarse argmax sits
/// on the range boundary.
OptimumReport find_optimal_d(double kappa_t, const AxisSpec &d_range);

struct ValidationPoint {
    double d = 0.0;
    double theta = 0.0;
    double kappa_t = 0.0;
    double pg_analytic = 0.0;
    double pg_oracle = 0.0;
    double deviation = 0.0;
};

struct ErratumPoint {
    double d = 0.0;
    double theta = 0.0;
    double pg_exact = 0.0;
    double pg_literal = 0.0;
    double gap = 0.0;
};

struct ValidationReport {
    std::vector<ValidationPoint> points;
    /// Literal-vs-exact phase gap per (d, theta); informational only.
    std::vector<ErratumPoint> erratum;
    double tolerance = 1e-6;
    double max_deviation = 0.0;
    double mean_deviation = 0.0;
    bool passed = false;
};

struct ValidationOptions {
    std::vector<double> d_values = {4.0, 10.0, 16.0, 25.0, 30.0};
    /// Rotation angles as fringe-phase multiples: theta = scale / D.
    std::vector<double> theta_scales = {0.0, 0.2, 1.5707963267948966, 3.141592653589793};
    std::vector<double> kappa_t_values = {0.0, 0.02, 0.1};
    double tolerance = 1e-6;
    double oracle_ceiling = 100.0;
    int threads = 0;
};

/// Oracle-vs-analytic deviation table over the requested grid.
ValidationReport validation_report(const ValidationOptions &options);

/// Frozen figure grids: fig1a, fig1b, fig1c, fig2a, fig2b, fig2c. The axis
/// ranges are reconstructions of the published plots.
SweepSpec preset(const std::string &name);
std::vector<std::string> preset_names();

} // namespace catsense::sweep
