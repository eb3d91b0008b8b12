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

#include "phase_space.hpp"

#include <cmath>

#include "error.hpp"

namespace catsense::phase {

bool CoherentLabel::is_finite() const {
    return std::isfinite(alpha.real()) && std::isfinite(alpha.imag());
}

namespace {

void require_finite(const CoherentLabel &a, const char *who) {
    if (!a.is_finite()) {
        throw Error(errc::invalid_argument, std::string(who) + ": non-finite coherent label");
    }
}

} // namespace

Complex coherent_overlap(const CoherentLabel &a, const CoherentLabel &b) {
    require_finite(a, "coherent_overlap");
    require_finite(b, "coherent_overlap");
    const Complex exponent =
        -0.5 * std::norm(a.alpha) - 0.5 * std::norm(b.alpha) + std::conj(a.alpha) * b.alpha;
    return std::exp(exponent);
}

CoherentLabel rotate_label(const CoherentLabel &a, double theta) {
    require_finite(a, "rotate_label");
    if (!std::isfinite(theta)) {
        throw Error(errc::invalid_argument, "rotate_label: non-finite angle");
    }
    return {a.alpha * std::polar(1.0, theta)};
}

CoherentLabel parity_label(const CoherentLabel &a) { return {-a.alpha}; }

DisplacedLabel displace_label(const CoherentLabel &a, const CoherentLabel &beta) {
    require_finite(a, "displace_label");
    require_finite(beta, "displace_label");
    const double phase_angle = std::imag(beta.alpha * std::conj(a.alpha));
    return {CoherentLabel{a.alpha + beta.alpha}, std::polar(1.0, phase_angle)};
}

double cat_normalization(const CoherentLabel &alpha0) {
    require_finite(alpha0, "cat_normalization");
    const double d = alpha0.mean_photons();
    return 1.0 / std::sqrt(2.0 * (1.0 + std::exp(-0.5 * d)));
}

Complex CatState::self_overlap() const {
    Complex sum{0.0, 0.0};
    for (const auto &cj : components) {
        for (const auto &ck : components) {
            sum += std::conj(cj.coefficient) * ck.coefficient * coherent_overlap(cj.label, ck.label);
        }
    }
    return sum;
}

Complex CatState::parity_overlap() const {
    Complex sum{0.0, 0.0};
    for (const auto &cj : components) {
        for (const auto &ck : components) {
            sum += std::conj(cj.coefficient) * ck.coefficient *
                   coherent_overlap(cj.label, parity_label(ck.label));
        }
    }
    return sum;
}

} // namespace catsense::phase
