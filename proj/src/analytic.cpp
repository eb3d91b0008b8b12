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

#include "analytic.hpp"

#include <cmath>

#include "error.hpp"

namespace catsense::analytic {

namespace {

void require_finite(double x, const char *who) {
    if (!std::isfinite(x)) {
        throw Error(errc::invalid_argument, std::string(who) + ": non-finite parameter");
    }
}

// Readout probability and its theta-slope for cat size d.
//
// P_g = N^2 [1 - (e^{-D/2} + e^{-D''/2})/2 + Re e^{c-} - Re e^{c+}] with
// c-+ = ln K - (D + D'')/8 -+ w/4 + i phi, w = D (2 u e^{i theta} - 1),
// u = e^{-kappa_t/2}. Keeping the exponents combined keeps every magnitude
// <= 1, so the expression stays finite for D up to 1e4 and beyond.
struct ReadoutTerms {
    double pg;
    double slope;
};

ReadoutTerms readout_terms(double d, double theta, double kappa_t, bool literal_phase) {
    const double u = std::exp(-0.5 * kappa_t);
    const Complex eit = std::polar(1.0, theta);
    const Complex z = 2.0 * u * eit - 1.0;
    const double d_sig = d * std::norm(z); // |alpha0''|^2
    const double ln_k = -0.5 * d * (1.0 - u * u);
    const double phi = literal_phase ? 0.5 * d * theta : 0.5 * d * u * std::sin(theta);
    const Complex w = d * z;
    const double n2 = 1.0 / (2.0 * (1.0 + std::exp(-0.5 * d)));
    const double a = ln_k - 0.125 * (d + d_sig);

    const Complex c_minus = Complex(a, phi) - 0.25 * w;
    const Complex c_plus = Complex(a, phi) + 0.25 * w;
    const Complex e_minus = std::exp(c_minus);
    const Complex e_plus = std::exp(c_plus);

    const double pg = n2 * (1.0 - 0.5 * (std::exp(-0.5 * d) + std::exp(-0.5 * d_sig)) +
                            e_minus.real() - e_plus.real());

    const Complex dz = Complex(0.0, 2.0 * u) * eit;
    const double dd_sig = 4.0 * d * u * std::sin(theta);
    const double dphi = literal_phase ? 0.5 * d : 0.5 * d * u * std::cos(theta);
    const Complex dw = d * dz;
    const double da = -0.125 * dd_sig;
    const Complex dc_minus = Complex(da, dphi) - 0.25 * dw;
    const Complex dc_plus = Complex(da, dphi) + 0.25 * dw;

    const double slope = n2 * (0.25 * dd_sig * std::exp(-0.5 * d_sig) +
                               (e_minus * dc_minus).real() - (e_plus * dc_plus).real());

    return {pg, slope};
}

// Rounding can push the exact cancellations at theta = 0 a few ulp outside
// [0, 1]; anything further out is a bug.
double clamp_probability(double pg, const char *who) {
    if (pg < -1e-9 || pg > 1.0 + 1e-9) {
        throw Error(errc::invalid_argument, std::string(who) + ": probability out of range");
    }
    return pg < 0.0 ? 0.0 : (pg > 1.0 ? 1.0 : pg);
}

} // namespace

ProtocolConfig ProtocolConfig::physical(CoherentLabel alpha0, double epsilon, double T,
                                        double kappa) {
    require_finite(epsilon, "ProtocolConfig");
    require_finite(T, "ProtocolConfig");
    require_finite(kappa, "ProtocolConfig");
    if (T < 0.0 || kappa < 0.0) {
        throw Error(errc::invalid_argument, "ProtocolConfig: T and kappa must be >= 0");
    }
    ProtocolConfig cfg;
    cfg.alpha0 = alpha0;
    cfg.epsilon = epsilon;
    cfg.T = T;
    cfg.kappa = kappa;
    cfg.theta = -epsilon * T;
    cfg.kappa_t = kappa * T;
    return cfg;
}

ProtocolConfig ProtocolConfig::reduced(CoherentLabel alpha0, double theta, double kappa_t) {
    require_finite(theta, "ProtocolConfig");
    require_finite(kappa_t, "ProtocolConfig");
    if (kappa_t < 0.0) {
        throw Error(errc::invalid_argument, "ProtocolConfig: kappa_t must be >= 0");
    }
    // T = 1 s; the sign convention theta = -epsilon T fixes epsilon = -theta.
    ProtocolConfig cfg;
    cfg.alpha0 = alpha0;
    cfg.epsilon = -theta;
    cfg.T = 1.0;
    cfg.kappa = kappa_t;
    cfg.theta = theta;
    cfg.kappa_t = kappa_t;
    return cfg;
}

ProtocolConfig ProtocolConfig::reduced(double d, double theta, double kappa_t) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
        throw Error(errc::invalid_argument, "ProtocolConfig: cat size must be finite and >= 0");
    }
    return reduced(CoherentLabel{std::sqrt(d), 0.0}, theta, kappa_t);
}

CatState prepare_cat(const CoherentLabel &alpha0) {
    const double n = phase::cat_normalization(alpha0);
    CatState cat;
    cat.norm_factor = n;
    cat.components = {{CoherentLabel{0.0, 0.0}, Complex{n, 0.0}}, {alpha0, Complex{n, 0.0}}};
    return cat;
}

CatState evolve_and_displace(const CatState &cat, const ProtocolConfig &cfg) {
    if (cat.components.size() != 2 || std::abs(cat.components[0].label.alpha) != 0.0) {
        throw Error(errc::invalid_argument,
                    "evolve_and_displace: expected a vacuum-first two-component cat");
    }
    if (std::abs(cat.components[1].label.alpha - cfg.alpha0.alpha) > 1e-12) {
        throw Error(errc::invalid_argument,
                    "evolve_and_displace: cat does not match cfg.alpha0");
    }
    const CoherentLabel shift{-0.5 * cfg.alpha0.alpha};
    CatState out;
    out.norm_factor = cat.norm_factor;
    out.components.reserve(2);
    for (const auto &component : cat.components) {
        const CoherentLabel rotated = phase::rotate_label(component.label, cfg.theta);
        const phase::DisplacedLabel moved = phase::displace_label(rotated, shift);
        out.components.push_back({moved.label, component.coefficient * moved.phase});
    }
    return out;
}

double ramsey_pg_ideal(const CoherentLabel &alpha0, double theta, PhaseMode mode) {
    require_finite(theta, "ramsey_pg_ideal");
    const auto terms =
        readout_terms(alpha0.mean_photons(), theta, 0.0, mode == PhaseMode::paper_literal);
    return clamp_probability(terms.pg, "ramsey_pg_ideal");
}

double pg_approx_ideal(double d, double theta) { return 0.5 * (1.0 - std::cos(d * theta)); }

DecoheredFieldState damp_and_displace(const ProtocolConfig &cfg) {
    if (cfg.kappa_t < 0.0) {
        throw Error(errc::invalid_argument, "damp_and_displace: kappa_t must be >= 0");
    }
    const double d = cfg.d();
    const double u = std::exp(-0.5 * cfg.kappa_t);
    const Complex a0 = cfg.alpha0.alpha;
    DecoheredFieldState state;
    state.label_ref = CoherentLabel{-0.5 * a0};
    state.label_sig = CoherentLabel{0.5 * a0 * (2.0 * u * std::polar(1.0, cfg.theta) - 1.0)};
    state.cross_k = std::exp(-0.5 * d * (1.0 - std::exp(-cfg.kappa_t)));
    state.cross_phi = 0.5 * d * u * std::sin(cfg.theta);
    state.norm_factor = phase::cat_normalization(cfg.alpha0);
    return state;
}

double ramsey_pg_damped(const ProtocolConfig &cfg) {
    require_finite(cfg.theta, "ramsey_pg_damped");
    if (cfg.kappa_t < 0.0) {
        throw Error(errc::invalid_argument, "ramsey_pg_damped: kappa_t must be >= 0");
    }
    const auto terms = readout_terms(cfg.d(), cfg.theta, cfg.kappa_t, false);
    return clamp_probability(terms.pg, "ramsey_pg_damped");
}

double pg_approx_damped(double d, double theta, double kappa_t) {
    return 0.5 * (1.0 - std::exp(-0.5 * d * kappa_t) * std::cos(d * theta));
}

double pg_from_state(const CatState &displaced_cat) {
    return 0.5 * (1.0 - displaced_cat.parity_overlap().real());
}

double pg_theta_slope(const ProtocolConfig &cfg) {
    return readout_terms(cfg.d(), cfg.theta, cfg.kappa_t, false).slope;
}

double snr(const ProtocolConfig &cfg, DerivativeMode mode, double step) {
    const auto terms = readout_terms(cfg.d(), cfg.theta, cfg.kappa_t, false);
    const double variance = terms.pg * (1.0 - terms.pg);
    if (variance < 1e-15) {
        throw Error(errc::degenerate_bias,
                    "snr: P_g (1 - P_g) vanishes at this operating point");
    }
    double slope = terms.slope;
    if (mode == DerivativeMode::central_difference) {
        const double h = step > 0.0 ? step : 1e-6 / std::max(cfg.d(), 1.0);
        auto pg_at = [&cfg](double theta) {
            return readout_terms(cfg.d(), theta, cfg.kappa_t, false).pg;
        };
        const double coarse = (pg_at(cfg.theta + h) - pg_at(cfg.theta - h)) / (2.0 * h);
        const double fine =
            (pg_at(cfg.theta + 0.5 * h) - pg_at(cfg.theta - 0.5 * h)) / h;
        // Richardson step removes the O(h^2) term and checks self-consistency.
        slope = (4.0 * fine - coarse) / 3.0;
    }
    return std::abs(slope) / std::sqrt(variance);
}

double bias_point(double d) {
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw Error(errc::invalid_argument, "bias_point: cat size must be positive");
    }
    return M_PI / (2.0 * d);
}

} // namespace catsense::analytic
