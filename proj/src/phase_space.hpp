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

#include <complex>
#include <vector>

namespace catsense::phase {

using Complex = std::complex<double>;

/// Phase-space coordinate labelling a coherent state.
///
/// Everything in this layer works on labels and coefficients only; states are
/// never expanded in a number basis, so the algebra stays exact at arbitrary
/// mean photon number.
struct CoherentLabel {
    Complex alpha{0.0, 0.0};

    CoherentLabel() = default;
    CoherentLabel(Complex a) : alpha(a) {}
    CoherentLabel(double re, double im) : alpha(re, im) {}

    /// Mean photon number |alpha|^2 of the labelled coherent state.
    double mean_photons() const { return std::norm(alpha); }

    bool is_finite() const;
};

/// <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b). Total on finite labels.
Complex coherent_overlap(const CoherentLabel &a, const CoherentLabel &b);

/// Free phase-space rotation a -> a e^{i theta}; preserves |a|^2.
CoherentLabel rotate_label(const CoherentLabel &a, double theta);

/// Photon-number parity flips the label sign, with no extra phase.
CoherentLabel parity_label(const CoherentLabel &a);

struct DisplacedLabel {
    CoherentLabel label;
    Complex phase; // unit magnitude
};

/// D(beta)|a> = exp(i Im(beta conj(a))) |a + beta>.
///
/// The phase convention is pinned by the protocol requirement that displacing
/// a rotated component a0 e^{i theta} by -a0/2 accrues exp(i |a0|^2 sin(theta) / 2);
/// the Fock-basis displacement operator reproduces it (see the oracle tests).
DisplacedLabel displace_label(const CoherentLabel &a, const CoherentLabel &beta);

/// Normalization of the two-component cat (|0> + |a0>):
/// (1 + e^{-|a0|^2/2})^{-1/2} / sqrt(2).
double cat_normalization(const CoherentLabel &alpha0);

struct CatComponent {
    CoherentLabel label;
    Complex coefficient; // includes the state normalization
};

/// Weighted superposition of coherent components. Two components throughout
/// this project.
struct CatState {
    std::vector<CatComponent> components;
    double norm_factor = 1.0;

    /// <C|C> from pairwise coherent overlaps; 1 for a normalized state.
    Complex self_overlap() const;

    /// <C|Pi|C> with Pi the photon-number parity.
    Complex parity_overlap() const;
};

} // namespace catsense::phase
