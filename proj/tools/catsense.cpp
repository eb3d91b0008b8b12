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

// Command-line front end; talks to the library exclusively through the C API.

#include <CLI11.hpp>
#include <catsense/catsense.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr double pi = 3.14159265358979323846;

struct AxisArg {
    double min = 0.0;
    double max = 0.0;
    int count = 1;
};

AxisArg parse_axis(const std::string &text, const char *flag) {
    AxisArg axis;
    const std::size_t first = text.find(':');
    if (first == std::string::npos) {
        try {
            axis.min = axis.max = std::stod(text);
        } catch (const std::exception &) {
            throw CLI::ValidationError(flag, "expected a number or min:max:count, got '" +
                                                 text + "'");
        }
        return axis;
    }
    const std::size_t second = text.find(':', first + 1);
    try {
        axis.min = std::stod(text.substr(0, first));
        if (second == std::string::npos) {
            axis.max = std::stod(text.substr(first + 1));
            axis.count = 57;
        } else {
            axis.max = std::stod(text.substr(first + 1, second - first - 1));
            axis.count = std::stoi(text.substr(second + 1));
        }
    } catch (const std::exception &) {
        throw CLI::ValidationError(flag, "expected min:max:count, got '" + text + "'");
    }
    return axis;
}

std::vector<double> parse_list(const std::string &text, const char *flag) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma - start);
        if (!item.empty()) {
            try {
                values.push_back(std::stod(item));
            } catch (const std::exception &) {
                throw CLI::ValidationError(flag, "bad list element '" + item + "'");
            }
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

[[noreturn]] void fail(catsense_status status) {
    std::fprintf(stderr, "catsense: error (%s): %s\n", catsense_status_name(status),
                 catsense_last_error());
    std::exit(1);
}

void check(catsense_status status) {
    if (status != CATSENSE_OK) {
        fail(status);
    }
}

double oracle_ceiling_default() {
    if (const char *env = std::getenv("CATSENSE_ORACLE_CEILING")) {
        try {
            return std::stod(env);
        } catch (const std::exception &) {
            std::fprintf(stderr, "catsense: ignoring bad CATSENSE_ORACLE_CEILING '%s'\n", env);
        }
    }
    return 100.0;
}

using SweepHandle = std::unique_ptr<catsense_sweep, decltype(&catsense_sweep_free)>;
using ResultHandle = std::unique_ptr<catsense_result, decltype(&catsense_result_free)>;
using ReportHandle = std::unique_ptr<catsense_report, decltype(&catsense_report_free)>;

void write_result(const catsense_result *result, const std::string &out,
                  const std::string &format, bool no_metadata) {
    if (out.empty()) {
        // No output path: CSV to stdout via a temporary is avoided by asking
        // for values; simplest is to emit to /dev/stdout.
        check(catsense_result_write_csv(result, "/dev/stdout", no_metadata ? 1 : 0));
        return;
    }
    auto with_extension = [&out](const char *ext) {
        if (out.size() > 4 && out.rfind('.') != std::string::npos &&
            out.rfind('.') >= out.size() - 5) {
            return out;
        }
        return out + ext;
    };
    if (format == "csv" || format == "both") {
        const std::string path = format == "both" ? out + ".csv" : with_extension(".csv");
        check(catsense_result_write_csv(result, path.c_str(), no_metadata ? 1 : 0));
        std::printf("%s\n", path.c_str());
    }
    if (format == "svg" || format == "both") {
        const std::string path = format == "both" ? out + ".svg" : with_extension(".svg");
        check(catsense_result_write_svg(result, path.c_str()));
        std::printf("%s\n", path.c_str());
    }
}

void run_figure_presets(const std::vector<std::string> &names, const std::string &out_dir,
                        const std::string &format, bool no_metadata) {
    for (const auto &name : names) {
        catsense_result *raw = nullptr;
        check(catsense_preset_run(name.c_str(), &raw));
        ResultHandle result(raw, catsense_result_free);
        if (format == "csv" || format == "both") {
            const std::string path = out_dir + "/" + name + ".csv";
            check(catsense_result_write_csv(result.get(), path.c_str(), no_metadata ? 1 : 0));
            std::printf("%s\n", path.c_str());
        }
        if (format == "svg" || format == "both") {
            const std::string path = out_dir + "/" + name + ".svg";
            check(catsense_result_write_svg(result.get(), path.c_str()));
            std::printf("%s\n", path.c_str());
        }
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"cat-state Ramsey interferometer: readout probabilities, SNR sweeps, "
                 "figure grids and oracle validation"};
    app.set_config("--config", "", "Read defaults from a key = value config file");
    app.require_subcommand(1);
    app.set_version_flag("--version", catsense_version());

    // pg
    auto *pg_cmd = app.add_subcommand("pg", "Readout probability at one operating point");
    double pg_d = 50.0, pg_theta = 0.0, pg_kappa_t = 0.0;
    std::string pg_mode = "exact";
    bool pg_oracle = false;
    pg_cmd->add_option("--D", pg_d, "Cat size |alpha0|^2")->required();
    pg_cmd->add_option("--theta", pg_theta, "Rotation angle in radians")->required();
    pg_cmd->add_option("--kappaT", pg_kappa_t, "Dimensionless loss kappa*T");
    pg_cmd->add_option("--mode", pg_mode, "Phase form: exact or paper_literal")
        ->check(CLI::IsMember({"exact", "paper_literal"}));
    pg_cmd->add_flag("--oracle", pg_oracle, "Also run the truncated-Fock oracle");

    // snr
    auto *snr_cmd = app.add_subcommand("snr", "Signal-to-noise ratio at one operating point");
    double snr_d = 50.0, snr_kappa_t = 0.0, snr_step = 0.0;
    std::string snr_theta = "bias", snr_derivative = "analytic";
    snr_cmd->add_option("--D", snr_d, "Cat size |alpha0|^2")->required();
    snr_cmd->add_option("--theta", snr_theta, "Rotation angle in radians, or 'bias'");
    snr_cmd->add_option("--kappaT", snr_kappa_t, "Dimensionless loss kappa*T");
    snr_cmd->add_option("--derivative", snr_derivative, "analytic or central")
        ->check(CLI::IsMember({"analytic", "central"}));
    snr_cmd->add_option("--step", snr_step, "Central-difference step (default 1e-6/D)");

    // sweep
    auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate quantities on a parameter grid");
    std::string sweep_d = "50", sweep_theta = "0", sweep_kappa_t = "0";
    std::string sweep_quantities = "pg_exact";
    std::string sweep_out, sweep_format = "csv";
    bool sweep_no_metadata = false;
    double sweep_ceiling = oracle_ceiling_default();
    sweep_cmd->add_option("--d", sweep_d, "D axis as value or min:max:count");
    sweep_cmd->add_option("--theta", sweep_theta, "theta axis as value, min:max:count, or 'bias'");
    sweep_cmd->add_option("--kappaT", sweep_kappa_t, "kappaT axis as value or min:max:count");
    sweep_cmd->add_option("--quantities", sweep_quantities,
                          "Comma list of pg_exact,pg_approx,pg_paper_literal,pg_oracle,snr");
    sweep_cmd->add_option("--out", sweep_out, "Output path (stdout CSV when omitted)");
    sweep_cmd->add_option("--format", sweep_format, "csv, svg, or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    sweep_cmd->add_flag("--no-metadata", sweep_no_metadata, "Suppress the metadata line");
    sweep_cmd->add_option("--oracle-ceiling", sweep_ceiling,
                          "Largest D allowed for pg_oracle (env CATSENSE_ORACLE_CEILING)");

    // optimum
    auto *optimum_cmd = app.add_subcommand("optimum", "Optimal cat size for a given loss");
    double optimum_kappa_t = 0.02;
    std::string optimum_range = "20:300:57";
    optimum_cmd->add_option("--kappaT", optimum_kappa_t, "Dimensionless loss kappa*T")
        ->required();
    optimum_cmd->add_option("--d", optimum_range, "Search range min:max:count");

    // validate
    auto *validate_cmd =
        app.add_subcommand("validate", "Oracle-vs-analytic deviation report");
    std::string validate_d = "4,10,16,25,30";
    std::string validate_scales; // default grid when empty
    std::string validate_kappa_t = "0,0.02,0.1";
    bool validate_long = false;
    double validate_ceiling = oracle_ceiling_default();
    validate_cmd->add_option("--d", validate_d, "Comma list of cat sizes");
    validate_cmd->add_option("--theta-scales", validate_scales,
                             "Comma list of fringe phases; theta = scale/D "
                             "(default 0,0.2,pi/2,pi)");
    validate_cmd->add_option("--kappaT", validate_kappa_t, "Comma list of loss values");
    validate_cmd->add_flag("--long", validate_long,
                           "Also check the D=100 optimum point against the oracle");
    validate_cmd->add_option("--oracle-ceiling", validate_ceiling,
                             "Largest D allowed (env CATSENSE_ORACLE_CEILING)");

    // fig1 / fig2
    auto *fig1_cmd = app.add_subcommand("fig1", "Lossless figure grids (fig1a, fig1b, fig1c)");
    auto *fig2_cmd = app.add_subcommand("fig2", "Lossy figure grids (fig2a, fig2b, fig2c)");
    std::string fig1_out = ".", fig2_out = ".";
    std::string fig1_format = "csv", fig2_format = "csv";
    bool fig1_no_metadata = false, fig2_no_metadata = false;
    fig1_cmd->add_option("--out", fig1_out, "Output directory");
    fig1_cmd->add_option("--format", fig1_format, "csv, svg, or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    fig1_cmd->add_flag("--no-metadata", fig1_no_metadata, "Suppress the metadata line");
    fig2_cmd->add_option("--out", fig2_out, "Output directory");
    fig2_cmd->add_option("--format", fig2_format, "csv, svg, or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    fig2_cmd->add_flag("--no-metadata", fig2_no_metadata, "Suppress the metadata line");

    CLI11_PARSE(app, argc, argv);

    if (pg_cmd->parsed()) {
        double value = 0.0;
        if (pg_kappa_t != 0.0) {
            check(catsense_pg_damped(pg_d, pg_theta, pg_kappa_t, &value));
        } else {
            check(catsense_pg_ideal(pg_d, pg_theta, pg_mode == "paper_literal" ? 1 : 0,
                                    &value));
        }
        if (pg_oracle) {
            double oracle = 0.0;
            check(catsense_pg_oracle(pg_d, pg_theta, pg_kappa_t, &oracle));
            std::printf("pg        %.17g\npg_oracle %.17g\n", value, oracle);
        } else {
            std::printf("%.17g\n", value);
        }
        return 0;
    }

    if (snr_cmd->parsed()) {
        double theta = 0.0;
        if (snr_theta == "bias") {
            check(catsense_bias_point(snr_d, &theta));
        } else {
            try {
                theta = std::stod(snr_theta);
            } catch (const std::exception &) {
                std::fprintf(stderr, "catsense: bad --theta value '%s'\n", snr_theta.c_str());
                return 1;
            }
        }
        double value = 0.0;
        if (snr_derivative == "central") {
            check(catsense_snr_central(snr_d, theta, snr_kappa_t, snr_step, &value));
        } else {
            check(catsense_snr(snr_d, theta, snr_kappa_t, &value));
        }
        std::printf("%.17g\n", value);
        return 0;
    }

    if (sweep_cmd->parsed()) {
        SweepHandle spec(catsense_sweep_new(), catsense_sweep_free);
        const AxisArg d_axis = parse_axis(sweep_d, "--d");
        check(catsense_sweep_d_axis(spec.get(), d_axis.min, d_axis.max, d_axis.count));
        if (sweep_theta == "bias") {
            check(catsense_sweep_theta_bias(spec.get()));
        } else {
            const AxisArg theta_axis = parse_axis(sweep_theta, "--theta");
            check(catsense_sweep_theta_axis(spec.get(), theta_axis.min, theta_axis.max,
                                            theta_axis.count));
        }
        const AxisArg kappa_axis = parse_axis(sweep_kappa_t, "--kappaT");
        check(catsense_sweep_kappat_axis(spec.get(), kappa_axis.min, kappa_axis.max,
                                         kappa_axis.count));
        std::size_t start = 0;
        while (start <= sweep_quantities.size()) {
            const std::size_t comma = sweep_quantities.find(',', start);
            const std::string name = sweep_quantities.substr(start, comma - start);
            if (!name.empty()) {
                check(catsense_sweep_quantity(spec.get(), name.c_str()));
            }
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        check(catsense_sweep_oracle_ceiling(spec.get(), sweep_ceiling));
        check(catsense_sweep_title(spec.get(), "sweep"));
        catsense_result *raw = nullptr;
        check(catsense_sweep_run(spec.get(), &raw));
        ResultHandle result(raw, catsense_result_free);
        write_result(result.get(), sweep_out, sweep_format, sweep_no_metadata);
        return 0;
    }

    if (optimum_cmd->parsed()) {
        const AxisArg range = parse_axis(optimum_range, "--d");
        double d_star = 0.0, r_star = 0.0;
        check(catsense_find_optimal_d(optimum_kappa_t, range.min, range.max,
                                      range.count < 8 ? 57 : range.count, &d_star, &r_star));
        std::printf("kappaT  %.17g\nd_star  %.17g\nr_star  %.17g\n", optimum_kappa_t, d_star,
                    r_star);
        return 0;
    }

    if (validate_cmd->parsed()) {
        const std::vector<double> d_values = parse_list(validate_d, "--d");
        const std::vector<double> scales = parse_list(validate_scales, "--theta-scales");
        const std::vector<double> kappa_values = parse_list(validate_kappa_t, "--kappaT");
        catsense_report *raw = nullptr;
        check(catsense_validation_run(d_values.empty() ? nullptr : d_values.data(),
                                      d_values.size(),
                                      scales.empty() ? nullptr : scales.data(), scales.size(),
                                      kappa_values.empty() ? nullptr : kappa_values.data(),
                                      kappa_values.size(), validate_ceiling, &raw));
        ReportHandle report(raw, catsense_report_free);
        std::fputs(catsense_report_text(report.get()), stdout);
        bool passed = catsense_report_passed(report.get()) != 0;

        if (validate_long) {
            const double d100 = 100.0;
            const double scale = pi / 2.0;
            const double kt = 0.02;
            catsense_report *raw_long = nullptr;
            check(catsense_validation_run(&d100, 1, &scale, 1, &kt, 1,
                                          std::max(validate_ceiling, 100.0), &raw_long));
            ReportHandle long_report(raw_long, catsense_report_free);
            std::fputs("\nlong check: D=100 optimum point\n", stdout);
            std::fputs(catsense_report_text(long_report.get()), stdout);
            passed = passed && catsense_report_passed(long_report.get()) != 0;
        }
        return passed ? 0 : 1;
    }

    if (fig1_cmd->parsed()) {
        run_figure_presets({"fig1a", "fig1b", "fig1c"}, fig1_out, fig1_format,
                           fig1_no_metadata);
        return 0;
    }
    if (fig2_cmd->parsed()) {
        run_figure_presets({"fig2a", "fig2b", "fig2c"}, fig2_out, fig2_format,
                           fig2_no_metadata);
        return 0;
    }
    return 0;
}
