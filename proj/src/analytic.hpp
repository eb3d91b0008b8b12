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

#include "phase_space.hpp"

namespace catsense::analytic {

using phase::CatState;
using phase::CoherentLabel;
using phase::Complex;

/// Physical and reduced parameters of one interferometer run.
///
/// theta = -epsilon * T is the rotation accumulated by the frequency shift
/// epsilon over the interrogation time T; kappa_t = kappa * T is the
/// dimensionless photon-loss strength. The reduced constructors fix T = 1 so
/// that (theta, kappa_t) can be set directly.
struct ProtocolConfig {
    CoherentLabel alpha0;
    double epsilon = 0.0; // rad/s
    double T = 0.0;       // s
    double kappa = 0.0;   // 1/s
    double theta = 0.0;   // = -epsilon * T
    double kappa_t = 0.0; // = kappa * T

    static ProtocolConfig physical(CoherentLabel alpha0, double epsilon, double T, double kappa);
    static ProtocolConfig reduced(CoherentLabel alpha0, double theta, double kappa_t);
    static ProtocolConfig reduced(double d, double theta, double kappa_t);

    /// Cat size D = |alpha0|^2.
    double d() const { return alpha0.mean_photons(); }
};

/// Which relative-phase form the readout formula uses. The exact phase is
/// D sin(theta)/2; the literal variant keeps the small-angle D theta / 2 and
/// exists only to document the gap between the two.
enum class PhaseMode { exact, paper_literal };

enum class DerivativeMode { analytic, central_difference };

/// Two-component amplitude cat (|0> + |alpha0>) with its normalization.
CatState prepare_cat(const CoherentLabel &alpha0);

/// Lossless pipeline: rotate by cfg.theta, then displace by -alpha0/2,
/// producing the phase cat (|-alpha0/2> + e^{i D sin(theta)/2} |alpha0'/2>)
/// with alpha0' = alpha0 (2 e^{i theta} - 1). Requires the vacuum-first cat
/// produced by prepare_cat(cfg.alpha0).
CatState evolve_and_displace(const CatState &cat, const ProtocolConfig &cfg);

/// Ground-state probability of the lossless Ramsey readout.
double ramsey_pg_ideal(const CoherentLabel &alpha0, double theta,
                       PhaseMode mode = PhaseMode::exact);

/// High-contrast approximation [1 - cos(D theta)] / 2.
double pg_approx_ideal(double d, double theta);

/// Field state after lossy free evolution and displacement: coherent labels
/// -alpha0/2 and alpha0''/2, cross-coherence magnitude K and cross phase phi.
struct DecoheredFieldState {
    CoherentLabel label_ref; // -alpha0/2
    CoherentLabel label_sig; // alpha0''/2, alpha0'' = alpha0 (2 e^{i theta - kappa_t/2} - 1)
    double cross_k = 1.0;    // exp(-|alpha0|^2 (1 - e^{-kappa_t}) / 2)
    double cross_phi = 0.0;  // |alpha0|^2 e^{-kappa_t/2} sin(theta) / 2
    double norm_factor = 1.0;
};

DecoheredFieldState damp_and_displace(const ProtocolConfig &cfg);

/// Ground-state probability with photon loss during the free evolution.
/// Reduces to ramsey_pg_ideal (exact mode) at kappa_t = 0.
double ramsey_pg_damped(const ProtocolConfig &cfg);

/// Damped approximation [1 - e^{-d kappa_t / 2} cos(d theta)] / 2.
double pg_approx_damped(double d, double theta, double kappa_t);

/// Independent readout route: P_g = (1 - Re<C|Pi|C>)/2 evaluated from the
/// component algebra of the displaced cat. Used to cross-check the closed
/// form, never called by it.
double pg_from_state(const CatState &displaced_cat);

/// Closed-form dP_g/dtheta of the damped readout probability.
double pg_theta_slope(const ProtocolConfig &cfg);

/// Signal-to-noise ratio |dP_g/dtheta| / sqrt(P_g (1 - P_g)).
///
/// step <= 0 picks the default central-difference step 1e-6 / D (the value is
/// Richardson-extrapolated from steps h and h/2). Throws degenerate_bias when
/// P_g (1 - P_g) < 1e-15.
double snr(const ProtocolConfig &cfg, DerivativeMode mode = DerivativeMode::analytic,
           double step = 0.0);

/// Operating point theta0 = pi / (2 D) where the fringe slope is maximal.
double bias_point(double d);

} // namespace catsense::analytic
