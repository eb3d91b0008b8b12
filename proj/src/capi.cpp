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

#define CATSENSE_API __attribute__((visibility("default")))

#include "catsense/catsense.h"

#include <cstring>
#include <new>
#include <string>

#include "analytic.hpp"
#include "error.hpp"
#include "fock.hpp"
#include "io.hpp"
#include "sweep.hpp"
#include "version.hpp"

namespace {

thread_local std::string last_error_message = "no error";

catsense_status status_from(catsense::errc code) {
    using catsense::errc;
    switch (code) {
    case errc::invalid_argument:
        return CATSENSE_ERR_INVALID_ARGUMENT;
    case errc::resource_limit:
        return CATSENSE_ERR_RESOURCE_LIMIT;
    case errc::truncation_too_small:
        return CATSENSE_ERR_TRUNCATION_TOO_SMALL;
    case errc::step_size_failure:
        return CATSENSE_ERR_STEP_SIZE_FAILURE;
    case errc::degenerate_bias:
        return CATSENSE_ERR_DEGENERATE_BIAS;
    case errc::no_interior_maximum:
        return CATSENSE_ERR_NO_INTERIOR_MAXIMUM;
    case errc::unsupported_shape:
        return CATSENSE_ERR_UNSUPPORTED_SHAPE;
    case errc::io_error:
        return CATSENSE_ERR_IO;
    }
    return CATSENSE_ERR_INTERNAL;
}

template <typename Fn>
catsense_status guarded(Fn &&fn) {
    try {
        fn();
        return CATSENSE_OK;
    } catch (const catsense::Error &error) {
        last_error_message = error.what();
        return status_from(error.code());
    } catch (const std::exception &error) {
        last_error_message = error.what();
        return CATSENSE_ERR_INTERNAL;
    } catch (...) {
        last_error_message = "unknown failure";
        return CATSENSE_ERR_INTERNAL;
    }
}

catsense_status require(bool ok, const char *message) {
    if (ok) {
        return CATSENSE_OK;
    }
    last_error_message = message;
    return CATSENSE_ERR_INVALID_ARGUMENT;
}

} // namespace

struct catsense_sweep {
    catsense::sweep::SweepSpec spec;
};

struct catsense_result {
    catsense::sweep::SweepResult result;
};

struct catsense_report {
    catsense::sweep::ValidationReport report;
    std::string text;
};

extern "C" {

const char *catsense_version(void) { return catsense::version_string; }

const char *catsense_status_name(catsense_status status) {
    switch (status) {
    case CATSENSE_OK:
        return "ok";
    case CATSENSE_ERR_INVALID_ARGUMENT:
        return "invalid_argument";
    case CATSENSE_ERR_RESOURCE_LIMIT:
        return "resource_limit";
    case CATSENSE_ERR_TRUNCATION_TOO_SMALL:
        return "truncation_too_small";
    case CATSENSE_ERR_STEP_SIZE_FAILURE:
        return "step_size_failure";
    case CATSENSE_ERR_DEGENERATE_BIAS:
        return "degenerate_bias";
    case CATSENSE_ERR_NO_INTERIOR_MAXIMUM:
        return "no_interior_maximum";
    case CATSENSE_ERR_UNSUPPORTED_SHAPE:
        return "unsupported_shape";
    case CATSENSE_ERR_IO:
        return "io_error";
    case CATSENSE_ERR_INTERNAL:
        return "internal";
    }
    return "unknown";
}

const char *catsense_last_error(void) { return last_error_message.c_str(); }

catsense_status catsense_pg_ideal(double d, double theta, int paper_literal, double *out_pg) {
    if (auto bad = require(out_pg != nullptr, "out_pg is NULL")) {
        return bad;
    }
    return guarded([&] {
        const catsense::phase::CoherentLabel alpha0{std::sqrt(d), 0.0};
        *out_pg = catsense::analytic::ramsey_pg_ideal(
            alpha0, theta,
            paper_literal != 0 ? catsense::analytic::PhaseMode::paper_literal
                               : catsense::analytic::PhaseMode::exact);
    });
}

catsense_status catsense_pg_damped(double d, double theta, double kappa_t, double *out_pg) {
    if (auto bad = require(out_pg != nullptr, "out_pg is NULL")) {
        return bad;
    }
    return guarded([&] {
        *out_pg = catsense::analytic::ramsey_pg_damped(
            catsense::analytic::ProtocolConfig::reduced(d, theta, kappa_t));
    });
}

catsense_status catsense_pg_approx(double d, double theta, double kappa_t, double *out_pg) {
    if (auto bad = require(out_pg != nullptr, "out_pg is NULL")) {
        return bad;
    }
    return guarded([&] { *out_pg = catsense::analytic::pg_approx_damped(d, theta, kappa_t); });
}

catsense_status catsense_pg_oracle(double d, double theta, double kappa_t, double *out_pg) {
    if (auto bad = require(out_pg != nullptr, "out_pg is NULL")) {
        return bad;
    }
    return guarded([&] {
        const auto cfg = catsense::analytic::ProtocolConfig::reduced(d, theta, kappa_t);
        const int n_trunc = catsense::fock::sequence_truncation(cfg);
        *out_pg = kappa_t == 0.0
                      ? catsense::fock::run_ideal_sequence(cfg.alpha0, theta, n_trunc)
                      : catsense::fock::run_damped_sequence(cfg, n_trunc);
    });
}

catsense_status catsense_snr(double d, double theta, double kappa_t, double *out_snr) {
    if (auto bad = require(out_snr != nullptr, "out_snr is NULL")) {
        return bad;
    }
    return guarded([&] {
        *out_snr = catsense::analytic::snr(
            catsense::analytic::ProtocolConfig::reduced(d, theta, kappa_t));
    });
}

catsense_status catsense_snr_central(double d, double theta, double kappa_t, double step,
                                     double *out_snr) {
    if (auto bad = require(out_snr != nullptr, "out_snr is NULL")) {
        return bad;
    }
    return guarded([&] {
        *out_snr = catsense::analytic::snr(
            catsense::analytic::ProtocolConfig::reduced(d, theta, kappa_t),
            catsense::analytic::DerivativeMode::central_difference, step);
    });
}

catsense_status catsense_bias_point(double d, double *out_theta) {
    if (auto bad = require(out_theta != nullptr, "out_theta is NULL")) {
        return bad;
    }
    return guarded([&] { *out_theta = catsense::analytic::bias_point(d); });
}

catsense_sweep *catsense_sweep_new(void) { return new (std::nothrow) catsense_sweep; }

void catsense_sweep_free(catsense_sweep *spec) { delete spec; }

catsense_status catsense_sweep_d_axis(catsense_sweep *spec, double min, double max,
                                      int count) {
    if (auto bad = require(spec != nullptr, "spec is NULL")) {
        return bad;
    }
    spec->spec.d_axis = {min, max, count};
    return CATSENSE_OK;
}

catsense_status catsense_sweep_theta_axis(catsense_sweep *spec, double min, double max,
                                          int count) {
    if (auto bad = require(spec != nullptr, "spec is NULL")) {
        return bad;
    }
    spec->spec.theta_axis = {min, max, count};
    spec->spec.bias_mode = false;
    return CATSENSE_OK;
}

catsense_status catsense_sweep_theta_bias(catsense_sweep *spec) {
    if (auto bad = require(spec != nullptr, "spec is NULL")) {
        return bad;
    }
    spec->spec.bias_mode = true;
    return CATSENSE_OK;
}

catsense_status catsense_sweep_kappat_axis(catsense_sweep *spec, double min, double max,
                                           int count) {
    if (auto bad = require(spec != nullptr, "spec is NULL")) {
        return bad;
    }
    spec->spec.kappa_t_axis = {min, max, count};
    return CATSENSE_OK;
}

catsense_status catsense_sweep_quantity(catsense_sweep *spec, const char *name) {
    if (auto bad = require(spec != nullptr && name != nullptr, "spec or name is NULL")) {
        return bad;
    }
    const auto quantity = catsense::sweep::quantity_from_name(name);
    if (!quantity) {
        last_error_message = std::string("unknown quantity: ") + name;
        return CATSENSE_ERR_INVALID_ARGUMENT;
    }
    spec->spec.enable(*quantity);
    return CATSENSE_OK;
}

catsense_status catsense_sweep_oracle_ceiling(catsense_sweep *spec, double max_d) {
    if (auto bad = require(spec != nullptr, "spec is NULL")) {
        return bad;
    }
    spec->spec.oracle_ceiling = max_d;
    return CATSENSE_OK;
}

catsense_status catsense_sweep_title(catsense_sweep *spec, const char *title) {
    if (auto bad = require(spec != nullptr && title != nullptr, "spec or title is NULL")) {
        return bad;
    }
    spec->spec.title = title;
    return CATSENSE_OK;
}

catsense_status catsense_sweep_run(const catsense_sweep *spec, catsense_result **out_result) {
    if (auto bad = require(spec != nullptr && out_result != nullptr,
                           "spec or out_result is NULL")) {
        return bad;
    }
    return guarded([&] {
        auto *handle = new catsense_result{catsense::sweep::sweep(spec->spec)};
        *out_result = handle;
    });
}

catsense_status catsense_preset_run(const char *name, catsense_result **out_result) {
    if (auto bad = require(name != nullptr && out_result != nullptr,
                           "name or out_result is NULL")) {
        return bad;
    }
    return guarded([&] {
        auto *handle = new catsense_result{catsense::sweep::sweep(catsense::sweep::preset(name))};
        *out_result = handle;
    });
}

void catsense_result_free(catsense_result *result) { delete result; }

long catsense_result_rows(const catsense_result *result) {
    return result == nullptr ? 0 : static_cast<long>(result->result.rows());
}

catsense_status catsense_result_value(const catsense_result *result, long row,
                                      const char *column, double *out_value,
                                      int *out_present) {
    if (auto bad = require(result != nullptr && column != nullptr && out_value != nullptr &&
                               out_present != nullptr,
                           "NULL argument")) {
        return bad;
    }
    if (row < 0 || static_cast<std::size_t>(row) >= result->result.rows()) {
        last_error_message = "row out of range";
        return CATSENSE_ERR_INVALID_ARGUMENT;
    }
    const auto index = static_cast<std::size_t>(row);
    *out_present = 1;
    if (std::strcmp(column, "D") == 0) {
        *out_value = result->result.d[index];
        return CATSENSE_OK;
    }
    if (std::strcmp(column, "theta") == 0) {
        *out_value = result->result.theta[index];
        return CATSENSE_OK;
    }
    if (std::strcmp(column, "kappaT") == 0) {
        *out_value = result->result.kappa_t[index];
        return CATSENSE_OK;
    }
    const auto quantity = catsense::sweep::quantity_from_name(column);
    if (!quantity) {
        last_error_message = std::string("unknown column: ") + column;
        return CATSENSE_ERR_INVALID_ARGUMENT;
    }
    const auto &data = result->result.columns[static_cast<std::size_t>(*quantity)];
    if (data.empty()) {
        *out_present = 0;
        *out_value = 0.0;
        return CATSENSE_OK;
    }
    *out_value = data[index];
    return CATSENSE_OK;
}

catsense_status catsense_result_write_csv(const catsense_result *result, const char *path,
                                          int no_metadata) {
    if (auto bad = require(result != nullptr && path != nullptr, "result or path is NULL")) {
        return bad;
    }
    return guarded([&] { catsense::io::emit_csv(result->result, path, no_metadata == 0); });
}

catsense_status catsense_result_write_svg(const catsense_result *result, const char *path) {
    if (auto bad = require(result != nullptr && path != nullptr, "result or path is NULL")) {
        return bad;
    }
    return guarded([&] { catsense::io::emit_svg(result->result, path); });
}

catsense_status catsense_find_optimal_d(double kappa_t, double d_min, double d_max, int count,
                                        double *out_d_star, double *out_r_star) {
    if (auto bad = require(out_d_star != nullptr && out_r_star != nullptr,
                           "output pointer is NULL")) {
        return bad;
    }
    return guarded([&] {
        const auto report =
            catsense::sweep::find_optimal_d(kappa_t, {d_min, d_max, count});
        *out_d_star = report.d_star;
        *out_r_star = report.r_star;
    });
}

catsense_status catsense_validation_run(const double *d_values, size_t n_d,
                                        const double *theta_scales, size_t n_theta,
                                        const double *kappa_t_values, size_t n_kappa_t,
                                        double oracle_ceiling, catsense_report **out_report) {
    if (auto bad = require(out_report != nullptr, "out_report is NULL")) {
        return bad;
    }
    return guarded([&] {
        catsense::sweep::ValidationOptions options;
        if (d_values != nullptr && n_d > 0) {
            options.d_values.assign(d_values, d_values + n_d);
        }
        if (theta_scales != nullptr && n_theta > 0) {
            options.theta_scales.assign(theta_scales, theta_scales + n_theta);
        }
        if (kappa_t_values != nullptr && n_kappa_t > 0) {
            options.kappa_t_values.assign(kappa_t_values, kappa_t_values + n_kappa_t);
        }
        if (oracle_ceiling > 0.0) {
            options.oracle_ceiling = oracle_ceiling;
        }
        auto *handle = new catsense_report;
        handle->report = catsense::sweep::validation_report(options);
        handle->text = catsense::io::render_validation(handle->report);
        *out_report = handle;
    });
}

void catsense_report_free(catsense_report *report) { delete report; }

int catsense_report_passed(const catsense_report *report) {
    return report != nullptr && report->report.passed ? 1 : 0;
}

double catsense_report_max_deviation(const catsense_report *report) {
    return report == nullptr ? -1.0 : report->report.max_deviation;
}

const char *catsense_report_text(const catsense_report *report) {
    return report == nullptr ? "" : report->text.c_str();
}

} // extern "C"
