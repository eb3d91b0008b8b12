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

#include "io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "version.hpp"

namespace catsense::io {

namespace {

std::string format_value(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(errc::io_error, "cannot open for writing: " + path);
    }
    out << content;
    if (!out) {
        throw Error(errc::io_error, "write failed: " + path);
    }
}

} // namespace

std::string csv_text(const sweep::SweepResult &result, bool include_metadata) {
    std::ostringstream out;
    if (include_metadata) {
        char hash[24];
        std::snprintf(hash, sizeof(hash), "%016llx",
                      static_cast<unsigned long long>(result.spec_hash));
        out << "# catsense " << version_string << " spec-hash=" << hash << "\n";
    }
    out << "D,theta,kappaT";
    for (int q = 0; q < sweep::quantity_count; ++q) {
        out << ',' << sweep::quantity_name(static_cast<sweep::Quantity>(q));
    }
    out << "\n";

    const bool any_quantity =
        std::any_of(result.columns.begin(), result.columns.end(),
                    [](const std::vector<double> &column) { return !column.empty(); });
    if (!any_quantity) {
        return out.str();
    }
    for (std::size_t row = 0; row < result.rows(); ++row) {
        out << format_value(result.d[row]) << ',' << format_value(result.theta[row]) << ','
            << format_value(result.kappa_t[row]);
        for (int q = 0; q < sweep::quantity_count; ++q) {
            const auto &column = result.columns[static_cast<std::size_t>(q)];
            out << ',';
            if (!column.empty()) {
                out << format_value(column[row]);
            }
        }
        out << "\n";
    }
    return out.str();
}

void emit_csv(const sweep::SweepResult &result, const std::string &path,
              bool include_metadata) {
    write_file(path, csv_text(result, include_metadata));
}

CsvTable read_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::io_error, "cannot open for reading: " + path);
    }
    CsvTable table;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        if (!header_seen) {
            table.header = fields;
            header_seen = true;
            continue;
        }
        std::vector<std::optional<double>> row;
        row.reserve(fields.size());
        for (const auto &field : fields) {
            if (field.empty()) {
                row.push_back(std::nullopt);
            } else {
                row.push_back(std::stod(field));
            }
        }
        table.rows.push_back(std::move(row));
    }
    if (!header_seen) {
        throw Error(errc::io_error, "no header row in " + path);
    }
    return table;
}

namespace {

struct GridLayout {
    // Axis identifiers: 0 = D, 1 = theta, 2 = kappaT.
    std::vector<int> varying;
    std::array<int, 3> counts{1, 1, 1};

    static GridLayout from(const sweep::SweepResult &result) {
        GridLayout layout;
        layout.counts[0] = result.spec.d_axis.count;
        layout.counts[1] = result.spec.bias_mode ? 1 : result.spec.theta_axis.count;
        layout.counts[2] = result.spec.kappa_t_axis.count;
        for (int axis = 0; axis < 3; ++axis) {
            if (layout.counts[static_cast<std::size_t>(axis)] > 1) {
                layout.varying.push_back(axis);
            }
        }
        return layout;
    }

    std::array<int, 3> indices(std::size_t row) const {
        const int nk = counts[2];
        const int nt = counts[1];
        return {static_cast<int>(row) / (nt * nk), (static_cast<int>(row) / nk) % nt,
                static_cast<int>(row) % nk};
    }
};

const char *axis_label(int axis) {
    switch (axis) {
    case 0:
        return "D";
    case 1:
        return "theta";
    default:
        return "kappaT";
    }
}

double axis_coordinate(const sweep::SweepResult &result, std::size_t row, int axis) {
    switch (axis) {
    case 0:
        return result.d[row];
    case 1:
        return result.theta[row];
    default:
        return result.kappa_t[row];
    }
}

// Monotone-luminance map from the viridis family, linearly interpolated.
std::string heat_color(double t) {
    static constexpr double stops[][3] = {
        {0.267, 0.005, 0.329}, {0.283, 0.141, 0.458}, {0.254, 0.265, 0.530},
        {0.207, 0.372, 0.553}, {0.164, 0.471, 0.558}, {0.128, 0.567, 0.551},
        {0.135, 0.659, 0.518}, {0.267, 0.749, 0.441}, {0.478, 0.821, 0.318},
        {0.741, 0.873, 0.150}, {0.993, 0.906, 0.144}};
    constexpr int n_stops = 11;
    t = std::clamp(t, 0.0, 1.0);
    const double position = t * (n_stops - 1);
    const int low = std::min(static_cast<int>(position), n_stops - 2);
    const double frac = position - low;
    char buffer[10];
    std::snprintf(buffer, sizeof(buffer), "#%02x%02x%02x",
                  static_cast<int>(std::lround(
                      255.0 * (stops[low][0] + frac * (stops[low + 1][0] - stops[low][0])))),
                  static_cast<int>(std::lround(
                      255.0 * (stops[low][1] + frac * (stops[low + 1][1] - stops[low][1])))),
                  static_cast<int>(std::lround(
                      255.0 * (stops[low][2] + frac * (stops[low + 1][2] - stops[low][2])))));
    return buffer;
}

std::string format_tick(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", value);
    return buffer;
}

std::vector<double> nice_ticks(double lo, double hi, int target = 5) {
    if (!(hi > lo)) {
        return {lo};
    }
    const double raw = (hi - lo) / target;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    double step = magnitude;
    for (double candidate : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (candidate * magnitude >= raw) {
            step = candidate * magnitude;
            break;
        }
    }
    std::vector<double> ticks;
    for (double tick = std::ceil(lo / step) * step; tick <= hi + 1e-12 * (hi - lo);
         tick += step) {
        ticks.push_back(std::abs(tick) < 1e-12 * step ? 0.0 : tick);
    }
    return ticks;
}

constexpr double svg_width = 640.0;
constexpr double svg_height = 440.0;
constexpr double margin_left = 70.0;
constexpr double margin_right = 90.0;
constexpr double margin_top = 40.0;
constexpr double margin_bottom = 55.0;

std::string coordinate(double v) {
    char buffer[24];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

void svg_header(std::ostringstream &out, const std::string &title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_width << "\" height=\""
        << svg_height << "\" viewBox=\"0 0 " << svg_width << ' ' << svg_height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << coordinate(svg_width / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
}

void svg_axes(std::ostringstream &out, double x_lo, double x_hi, double y_lo, double y_hi,
              const std::string &x_label, const std::string &y_label) {
    const double plot_w = svg_width - margin_left - margin_right;
    const double plot_h = svg_height - margin_top - margin_bottom;
    auto x_at = [&](double x) { return margin_left + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto y_at = [&](double y) {
        return margin_top + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;
    };
    out << "<rect x=\"" << coordinate(margin_left) << "\" y=\"" << coordinate(margin_top)
        << "\" width=\"" << coordinate(plot_w) << "\" height=\"" << coordinate(plot_h)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double tick : nice_ticks(x_lo, x_hi)) {
        const double x = x_at(tick);
        out << "<line x1=\"" << coordinate(x) << "\" y1=\"" << coordinate(margin_top + plot_h)
            << "\" x2=\"" << coordinate(x) << "\" y2=\""
            << coordinate(margin_top + plot_h + 5) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << coordinate(x) << "\" y=\""
            << coordinate(margin_top + plot_h + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_tick(tick) << "</text>\n";
    }
    for (double tick : nice_ticks(y_lo, y_hi)) {
        const double y = y_at(tick);
        out << "<line x1=\"" << coordinate(margin_left - 5) << "\" y1=\"" << coordinate(y)
            << "\" x2=\"" << coordinate(margin_left) << "\" y2=\"" << coordinate(y)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << coordinate(margin_left - 9) << "\" y=\"" << coordinate(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_tick(tick) << "</text>\n";
    }
    out << "<text x=\"" << coordinate(margin_left + plot_w / 2) << "\" y=\""
        << coordinate(svg_height - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
        << "</text>\n";
    out << "<text x=\"18\" y=\"" << coordinate(margin_top + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << coordinate(margin_top + plot_h / 2) << ")\">"
        << y_label << "</text>\n";
}

std::vector<int> enabled_quantities(const sweep::SweepResult &result) {
    std::vector<int> enabled;
    for (int q = 0; q < sweep::quantity_count; ++q) {
        if (!result.columns[static_cast<std::size_t>(q)].empty()) {
            enabled.push_back(q);
        }
    }
    return enabled;
}

std::string line_plot(const sweep::SweepResult &result, int axis) {
    static constexpr const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e"};
    const std::vector<int> enabled = enabled_quantities(result);
    double x_lo = axis_coordinate(result, 0, axis);
    double x_hi = x_lo;
    double y_lo = 0.0, y_hi = 0.0;
    bool first = true;
    for (std::size_t row = 0; row < result.rows(); ++row) {
        const double x = axis_coordinate(result, row, axis);
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        for (int q : enabled) {
            const double y = result.columns[static_cast<std::size_t>(q)][row];
            if (first) {
                y_lo = y_hi = y;
                first = false;
            }
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (y_hi == y_lo) {
        y_hi = y_lo + 1.0;
    }
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    const double plot_w = svg_width - margin_left - margin_right;
    const double plot_h = svg_height - margin_top - margin_bottom;
    std::ostringstream out;
    svg_header(out, result.spec.title.empty() ? "sweep" : result.spec.title);
    svg_axes(out, x_lo, x_hi, y_lo, y_hi, axis_label(axis),
             enabled.size() == 1 ? sweep::quantity_name(static_cast<sweep::Quantity>(enabled[0]))
                                 : "value");
    for (std::size_t series = 0; series < enabled.size(); ++series) {
        const auto &column = result.columns[static_cast<std::size_t>(enabled[series])];
        out << "<polyline fill=\"none\" stroke=\"" << palette[series % 5]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t row = 0; row < result.rows(); ++row) {
            const double x = margin_left + (axis_coordinate(result, row, axis) - x_lo) /
                                               (x_hi - x_lo) * plot_w;
            const double y =
                margin_top + plot_h - (column[row] - y_lo) / (y_hi - y_lo) * plot_h;
            out << coordinate(x) << ',' << coordinate(y) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << coordinate(svg_width - margin_right + 8) << "\" y=\""
            << coordinate(margin_top + 16.0 * (static_cast<double>(series) + 1.0))
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << palette[series % 5]
            << "\">" << sweep::quantity_name(static_cast<sweep::Quantity>(enabled[series]))
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string heatmap(const sweep::SweepResult &result, const GridLayout &layout) {
    const std::vector<int> enabled = enabled_quantities(result);
    const int quantity = enabled.front();
    const auto &column = result.columns[static_cast<std::size_t>(quantity)];
    const int x_axis = layout.varying[0];
    const int y_axis = layout.varying[1];
    const int nx = layout.counts[static_cast<std::size_t>(x_axis)];
    const int ny = layout.counts[static_cast<std::size_t>(y_axis)];

    double v_lo = column[0], v_hi = column[0];
    for (double v : column) {
        v_lo = std::min(v_lo, v);
        v_hi = std::max(v_hi, v);
    }
    if (v_hi == v_lo) {
        v_hi = v_lo + 1.0;
    }
    double x_lo = axis_coordinate(result, 0, x_axis);
    double x_hi = axis_coordinate(result, result.rows() - 1, x_axis);
    double y_lo = axis_coordinate(result, 0, y_axis);
    double y_hi = axis_coordinate(result, result.rows() - 1, y_axis);

    const double plot_w = svg_width - margin_left - margin_right;
    const double plot_h = svg_height - margin_top - margin_bottom;
    const double cell_w = plot_w / nx;
    const double cell_h = plot_h / ny;

    std::ostringstream out;
    svg_header(out, result.spec.title.empty() ? "sweep" : result.spec.title);
    std::string title_label = std::string(sweep::quantity_name(
                                  static_cast<sweep::Quantity>(quantity)));
    svg_axes(out, x_lo, x_hi, y_lo, y_hi, axis_label(x_axis), axis_label(y_axis));
    for (std::size_t row = 0; row < result.rows(); ++row) {
        const auto idx = layout.indices(row);
        const int ix = idx[static_cast<std::size_t>(x_axis)];
        const int iy = idx[static_cast<std::size_t>(y_axis)];
        const double t = (column[row] - v_lo) / (v_hi - v_lo);
        out << "<rect x=\"" << coordinate(margin_left + ix * cell_w) << "\" y=\""
            << coordinate(margin_top + plot_h - (iy + 1) * cell_h) << "\" width=\""
            << coordinate(cell_w + 0.5) << "\" height=\"" << coordinate(cell_h + 0.5)
            << "\" fill=\"" << heat_color(t) << "\"/>\n";
    }
    // colorbar
    const double bar_x = svg_width - margin_right + 20;
    constexpr int bar_steps = 32;
    for (int i = 0; i < bar_steps; ++i) {
        const double t = (static_cast<double>(i) + 0.5) / bar_steps;
        out << "<rect x=\"" << coordinate(bar_x) << "\" y=\""
            << coordinate(margin_top + plot_h * (1.0 - (i + 1.0) / bar_steps)) << "\" width=\""
            << coordinate(14) << "\" height=\"" << coordinate(plot_h / bar_steps + 0.5)
            << "\" fill=\"" << heat_color(t) << "\"/>\n";
    }
    out << "<text x=\"" << coordinate(bar_x + 18) << "\" y=\""
        << coordinate(margin_top + plot_h)
        << "\" font-family=\"sans-serif\" font-size=\"10\">" << format_tick(v_lo)
        << "</text>\n";
    out << "<text x=\"" << coordinate(bar_x + 18) << "\" y=\"" << coordinate(margin_top + 8)
        << "\" font-family=\"sans-serif\" font-size=\"10\">" << format_tick(v_hi)
        << "</text>\n";
    out << "<text x=\"" << coordinate(bar_x + 7) << "\" y=\"" << coordinate(margin_top - 8)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << title_label << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string svg_text(const sweep::SweepResult &result) {
    const GridLayout layout = GridLayout::from(result);
    if (enabled_quantities(result).empty()) {
        throw Error(errc::unsupported_shape, "emit_svg: no quantities to plot");
    }
    if (layout.varying.size() == 1) {
        return line_plot(result, layout.varying[0]);
    }
    if (layout.varying.size() == 2) {
        return heatmap(result, layout);
    }
    throw Error(errc::unsupported_shape,
                "emit_svg: need exactly 1 or 2 varying axes, got " +
                    std::to_string(layout.varying.size()));
}

void emit_svg(const sweep::SweepResult &result, const std::string &path) {
    write_file(path, svg_text(result));
}

std::string render_validation(const sweep::ValidationReport &report) {
    std::ostringstream out;
    char line[160];
    out << "oracle-vs-analytic validation\n";
    std::snprintf(line, sizeof(line), "  points: %zu   tolerance: %.3g\n",
                  report.points.size(), report.tolerance);
    out << line;
    std::snprintf(line, sizeof(line),
                  "  max |analytic - oracle| = %.6g   mean = %.6g\n", report.max_deviation,
                  report.mean_deviation);
    out << line;
    out << "  result: " << (report.passed ? "PASS" : "FAIL") << "\n\n";
    out << "      D      theta   kappaT       pg_analytic         pg_oracle        |dev|\n";
    for (const auto &point : report.points) {
        std::snprintf(line, sizeof(line), "  %5g  %9.6f  %7g  %16.12f  %16.12f  %11.3e\n",
                      point.d, point.theta, point.kappa_t, point.pg_analytic, point.pg_oracle,
                      point.deviation);
        out << line;
    }
    out << "\nphase-form gap, exact D sin(theta)/2 vs printed D theta/2 (informational)\n";
    out << "      D      theta          pg_exact        pg_literal          gap\n";
    for (const auto &point : report.erratum) {
        std::snprintf(line, sizeof(line), "  %5g  %9.6f  %16.12f  %16.12f  %11.3e\n", point.d,
                      point.theta, point.pg_exact, point.pg_literal, point.gap);
        out << line;
    }
    return out.str();
}

std::string render_optimum(const sweep::OptimumReport &report) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line),
                  "optimal cat size at kappaT = %g\n  d_star = %.4f\n  r_star = %.6f\n"
                  "  bracket = [%.4f, %.4f], tolerance %.2g\n",
                  report.kappa_t, report.d_star, report.r_star, report.bracket_lo,
                  report.bracket_hi, report.tolerance);
    out << line;
    return out.str();
}

} // namespace catsense::io
