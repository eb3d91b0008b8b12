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

#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "analytic.hpp"
#include "error.hpp"
#include "fock.hpp"
#include "parallel.hpp"

namespace catsense::sweep {

std::vector<double> AxisSpec::values() const {
    if (count < 1) {
        throw Error(errc::invalid_argument, "AxisSpec: count must be >= 1");
    }
    if (!(min <= max) || !std::isfinite(min) || !std::isfinite(max)) {
        throw Error(errc::invalid_argument, "AxisSpec: need finite min <= max");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        out.push_back(min);
        return out;
    }
    for (int i = 0; i < count; ++i) {
        out.push_back(min + (max - min) * static_cast<double>(i) /
                                static_cast<double>(count - 1));
    }
    return out;
}

const char *quantity_name(Quantity q) {
    switch (q) {
    case Quantity::pg_exact:
        return "pg_exact";
    case Quantity::pg_approx:
        return "pg_approx";
    case Quantity::pg_paper_literal:
        return "pg_paper_literal";
    case Quantity::pg_oracle:
        return "pg_oracle";
    case Quantity::snr:
        return "snr";
    }
    return "?";
}

std::optional<Quantity> quantity_from_name(const std::string &name) {
    for (int i = 0; i < quantity_count; ++i) {
        if (name == quantity_name(static_cast<Quantity>(i))) {
            return static_cast<Quantity>(i);
        }
    }
    return std::nullopt;
}

std::uint64_t hash_spec(const SweepSpec &spec) {
    char buffer[512];
    int used = std::snprintf(buffer, sizeof(buffer),
                             "d=%.17g:%.17g:%d;theta=%.17g:%.17g:%d;bias=%d;"
                             "kt=%.17g:%.17g:%d;q=",
                             spec.d_axis.min, spec.d_axis.max, spec.d_axis.count,
                             spec.theta_axis.min, spec.theta_axis.max, spec.theta_axis.count,
                             spec.bias_mode ? 1 : 0, spec.kappa_t_axis.min,
                             spec.kappa_t_axis.max, spec.kappa_t_axis.count);
    std::string canonical(buffer, static_cast<std::size_t>(used));
    for (int i = 0; i < quantity_count; ++i) {
        if (spec.quantities[static_cast<std::size_t>(i)]) {
            canonical += quantity_name(static_cast<Quantity>(i));
            canonical += ',';
        }
    }
    canonical += ";title=" + spec.title;

    std::uint64_t hash = 1469598103934665603ull; // FNV-1a
    for (unsigned char c : canonical) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

int SweepResult::varying_axes() const {
    int n = 0;
    n += spec.d_axis.count > 1 ? 1 : 0;
    n += (!spec.bias_mode && spec.theta_axis.count > 1) ? 1 : 0;
    n += spec.kappa_t_axis.count > 1 ? 1 : 0;
    return n;
}

namespace {

double oracle_pg(double d, double theta, double kappa_t) {
    const auto cfg = analytic::ProtocolConfig::reduced(d, theta, kappa_t);
    const int n_trunc = fock::sequence_truncation(cfg);
    if (kappa_t == 0.0) {
        return fock::run_ideal_sequence(cfg.alpha0, theta, n_trunc);
    }
    return fock::run_damped_sequence(cfg, n_trunc);
}

} // namespace

SweepResult sweep(const SweepSpec &spec) {
    const std::vector<double> d_values = spec.d_axis.values();
    const std::vector<double> theta_values =
        spec.bias_mode ? std::vector<double>{0.0} : spec.theta_axis.values();
    const std::vector<double> kappa_t_values = spec.kappa_t_axis.values();
    for (double kt : kappa_t_values) {
        if (kt < 0.0) {
            throw Error(errc::invalid_argument, "sweep: kappa_t must be >= 0");
        }
    }
    if (spec.enabled(Quantity::pg_oracle) && spec.d_axis.max > spec.oracle_ceiling) {
        throw Error(errc::resource_limit,
                    "sweep: pg_oracle requested above the oracle ceiling");
    }
    if (spec.bias_mode) {
        for (double d : d_values) {
            if (!(d > 0.0)) {
                throw Error(errc::invalid_argument, "sweep: bias mode needs D > 0");
            }
        }
    }

    SweepResult result;
    result.spec = spec;
    result.spec_hash = hash_spec(spec);
    const std::size_t rows = d_values.size() * theta_values.size() * kappa_t_values.size();
    result.d.resize(rows);
    result.theta.resize(rows);
    result.kappa_t.resize(rows);
    for (int q = 0; q < quantity_count; ++q) {
        if (spec.quantities[static_cast<std::size_t>(q)]) {
            result.columns[static_cast<std::size_t>(q)].resize(rows);
        }
    }

    // Row-major order: D outermost, then theta, then kappa_t.
    const std::size_t theta_stride = kappa_t_values.size();
    const std::size_t d_stride = theta_values.size() * theta_stride;
    parallel_for(
        rows,
        [&](std::size_t row) {
            const double d = d_values[row / d_stride];
            const double theta = spec.bias_mode
                                     ? analytic::bias_point(d)
                                     : theta_values[(row / theta_stride) % theta_values.size()];
            const double kappa_t = kappa_t_values[row % theta_stride];
            result.d[row] = d;
            result.theta[row] = theta;
            result.kappa_t[row] = kappa_t;

            const auto cfg = analytic::ProtocolConfig::reduced(d, theta, kappa_t);
            if (spec.enabled(Quantity::pg_exact)) {
                result.columns[0][row] = analytic::ramsey_pg_damped(cfg);
            }
            if (spec.enabled(Quantity::pg_approx)) {
                result.columns[1][row] = analytic::pg_approx_damped(d, theta, kappa_t);
            }
            if (spec.enabled(Quantity::pg_paper_literal)) {
                result.columns[2][row] = analytic::ramsey_pg_ideal(
                    cfg.alpha0, theta, analytic::PhaseMode::paper_literal);
            }
            if (spec.enabled(Quantity::pg_oracle)) {
                result.columns[3][row] = oracle_pg(d, theta, kappa_t);
            }
            if (spec.enabled(Quantity::snr)) {
                result.columns[4][row] = analytic::snr(cfg);
            }
        },
        spec.threads);
    return result;
}

SweepResult snr_curve(const AxisSpec &d_axis, double kappa_t) {
    SweepSpec spec;
    spec.d_axis = d_axis;
    spec.bias_mode = true;
    spec.kappa_t_axis = AxisSpec::fixed(kappa_t);
    spec.enable(Quantity::snr);
    spec.title = "snr_curve";
    return sweep(spec);
}

namespace {

double snr_at_bias(double d, double kappa_t) {
    return analytic::snr(analytic::ProtocolConfig::reduced(d, analytic::bias_point(d), kappa_t));
}

} // namespace

OptimumReport find_optimal_d(double kappa_t, const AxisSpec &d_range) {
    if (d_range.count < 8) {
        throw Error(errc::invalid_argument,
                    "find_optimal_d: need at least 8 coarse grid points");
    }
    const std::vector<double> grid = d_range.values();
    if (!(grid.front() > 0.0)) {
        throw Error(errc::invalid_argument, "find_optimal_d: range must have D > 0");
    }
    std::vector<double> r(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        r[i] = snr_at_bias(grid[i], kappa_t);
    }
    const std::size_t peak =
        static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin());
    if (peak == 0 || peak + 1 == grid.size()) {
        throw Error(errc::no_interior_maximum,
                    "find_optimal_d: R is monotone on this range, no interior maximum");
    }

    double lo = grid[peak - 1];
    double hi = grid[peak + 1];
    constexpr double inv_golden = 0.61803398874989485; // (sqrt(5) - 1) / 2
    double c = hi - inv_golden * (hi - lo);
    double d = lo + inv_golden * (hi - lo);
    double fc = snr_at_bias(c, kappa_t);
    double fd = snr_at_bias(d, kappa_t);
    constexpr double tolerance = 0.1;
    while (hi - lo > tolerance) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_golden * (hi - lo);
            fc = snr_at_bias(c, kappa_t);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_golden * (hi - lo);
            fd = snr_at_bias(d, kappa_t);
        }
    }

    OptimumReport report;
    report.kappa_t = kappa_t;
    report.d_star = 0.5 * (lo + hi);
    report.r_star = snr_at_bias(report.d_star, kappa_t);
    report.bracket_lo = lo;
    report.bracket_hi = hi;
    report.tolerance = tolerance;
    return report;
}

ValidationReport validation_report(const ValidationOptions &options) {
    if (options.d_values.empty() || options.theta_scales.empty() ||
        options.kappa_t_values.empty()) {
        throw Error(errc::invalid_argument, "validation_report: empty grid");
    }
    for (double d : options.d_values) {
        if (!(d > 0.0)) {
            throw Error(errc::invalid_argument, "validation_report: need D > 0");
        }
        if (d > options.oracle_ceiling) {
            throw Error(errc::resource_limit,
                        "validation_report: D above the oracle ceiling");
        }
    }

    ValidationReport report;
    report.tolerance = options.tolerance;
    const std::size_t n_theta = options.theta_scales.size();
    const std::size_t n_kt = options.kappa_t_values.size();
    report.points.resize(options.d_values.size() * n_theta * n_kt);

    parallel_for(
        report.points.size(),
        [&](std::size_t index) {
            const double d = options.d_values[index / (n_theta * n_kt)];
            const double scale = options.theta_scales[(index / n_kt) % n_theta];
            const double kappa_t = options.kappa_t_values[index % n_kt];
            const double theta = scale / d;
            ValidationPoint &point = report.points[index];
            point.d = d;
            point.theta = theta;
            point.kappa_t = kappa_t;
            point.pg_analytic =
                analytic::ramsey_pg_damped(analytic::ProtocolConfig::reduced(d, theta, kappa_t));
            const auto cfg = analytic::ProtocolConfig::reduced(d, theta, kappa_t);
            point.pg_oracle = fock::run_damped_sequence(cfg, fock::sequence_truncation(cfg));
            point.deviation = std::abs(point.pg_analytic - point.pg_oracle);
        },
        options.threads);

    double sum = 0.0;
    for (const auto &point : report.points) {
        report.max_deviation = std::max(report.max_deviation, point.deviation);
        sum += point.deviation;
    }
    report.mean_deviation = sum / static_cast<double>(report.points.size());
    report.passed = report.max_deviation <= report.tolerance;

    for (double d : options.d_values) {
        for (double scale : options.theta_scales) {
            if (scale == 0.0) {
                continue;
            }
            const double theta = scale / d;
            ErratumPoint erratum;
            erratum.d = d;
            erratum.theta = theta;
            erratum.pg_exact = analytic::ramsey_pg_ideal(phase::CoherentLabel{std::sqrt(d), 0.0},
                                                         theta, analytic::PhaseMode::exact);
            erratum.pg_literal = analytic::ramsey_pg_ideal(
                phase::CoherentLabel{std::sqrt(d), 0.0}, theta,
                analytic::PhaseMode::paper_literal);
            erratum.gap = std::abs(erratum.pg_exact - erratum.pg_literal);
            report.erratum.push_back(erratum);
        }
    }
    return report;
}

SweepSpec preset(const std::string &name) {
    SweepSpec spec;
    spec.title = name;
    if (name == "fig1a") {
        spec.d_axis = {1.0, 100.0, 100};
        spec.theta_axis = {0.0, 0.35, 141};
        spec.enable(Quantity::pg_exact);
    } else if (name == "fig1b") {
        spec.d_axis = AxisSpec::fixed(50.0);
        spec.theta_axis = {0.0, 0.35, 351};
        spec.enable(Quantity::pg_exact);
        spec.enable(Quantity::pg_approx);
        spec.enable(Quantity::pg_paper_literal);
    } else if (name == "fig1c") {
        spec.d_axis = {10.0, 200.0, 96};
        spec.bias_mode = true;
        spec.enable(Quantity::snr);
    } else if (name == "fig2a") {
        spec.d_axis = AxisSpec::fixed(50.0);
        spec.theta_axis = {0.0, 0.15, 76};
        spec.kappa_t_axis = {0.0, 0.2, 41};
        spec.enable(Quantity::pg_exact);
    } else if (name == "fig2b") {
        spec.d_axis = {10.0, 200.0, 96};
        spec.bias_mode = true;
        spec.kappa_t_axis = {0.0, 0.2, 41};
        spec.enable(Quantity::snr);
    } else if (name == "fig2c") {
        spec.d_axis = {20.0, 300.0, 141};
        spec.bias_mode = true;
        spec.kappa_t_axis = AxisSpec::fixed(0.02);
        spec.enable(Quantity::snr);
    } else {
        throw Error(errc::invalid_argument, "unknown preset: " + name);
    }
    return spec;
}

std::vector<std::string> preset_names() {
    return {"fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig2c"};
}

} // namespace catsense::sweep
