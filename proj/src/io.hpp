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

#include <optional>
#include <string>
#include <vector>

#include "sweep.hpp"

namespace catsense::io {

/// Writes the result grid as CSV with the fixed column set
/// D,theta,kappaT,pg_exact,pg_approx,pg_paper_literal,pg_oracle,snr.
/// Unrequested quantities are left as empty fields; values carry 17
/// significant digits so parsing recovers them bit-exactly. include_metadata
/// prepends the "# catsense <version> spec-hash=<hash>" comment line.
void emit_csv(const sweep::SweepResult &result, const std::string &path,
              bool include_metadata = true);

/// Same serialization as emit_csv, returned as a string.
std::string csv_text(const sweep::SweepResult &result, bool include_metadata = true);

/// Line plot for grids with one varying axis, heatmap for two. Throws
/// unsupported_shape for single points and >= 3 varying axes.
void emit_svg(const sweep::SweepResult &result, const std::string &path);

std::string svg_text(const sweep::SweepResult &result);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::optional<double>>> rows;
};

/// Parses a CSV produced by emit_csv (comment lines are skipped).
CsvTable read_csv(const std::string &path);

/// Plain-text rendering of the oracle-vs-analytic validation table.
std::string render_validation(const sweep::ValidationReport &report);

std::string render_optimum(const sweep::OptimumReport &report);

} // namespace catsense::io
