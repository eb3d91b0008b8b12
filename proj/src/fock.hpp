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

#include <Eigen/Dense>
#include <complex>

#include "analytic.hpp"
#include "phase_space.hpp"

namespace catsense::fock {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Hard cap on the truncation dimension; everything here is desk-scale dense
/// linear algebra.
inline constexpr int default_truncation_ceiling = 400;

/// Smallest cutoff N such that a coherent state with |alpha| <= alpha_max has
/// Poisson tail mass beyond N certified below tail_tol (via a geometric bound
/// on the log-domain term recursion). Throws resource_limit past the ceiling.
int truncation_bound(double alpha_max, double tail_tol = 1e-14,
                     int ceiling = default_truncation_ceiling);

/// State vector in the lowest n_trunc + 1 number states.
struct FockVector {
    Vector amplitudes;
    int n_trunc = 0;

    double squared_norm() const { return amplitudes.squaredNorm(); }
    Complex inner(const FockVector &other) const { return amplitudes.dot(other.amplitudes); }
    double mean_photons() const;
};

enum class OperatorKind { number, displacement, parity, rotation };

struct FockOperator {
    Matrix matrix;
    OperatorKind kind;
};

/// Normalized truncated expansion e^{-|a|^2/2} a^n / sqrt(n!). Throws
/// truncation_too_small when the discarded tail mass reaches 1e-12.
FockVector coherent_vector(const phase::CoherentLabel &alpha, int n_trunc);

/// exp(beta a^dag - conj(beta) a) on the truncated space, built by
/// scaling-and-squaring of the tridiagonal generator (exactly anti-Hermitian
/// after truncation, so the result is unitary to rounding). Column norms are
/// verified to 1e-10.
FockOperator displacement_matrix(const phase::CoherentLabel &beta, int n_trunc);

/// diag((-1)^n)
FockOperator parity_matrix(int n_trunc);

/// diag(e^{i theta n})
FockOperator rotation_matrix(double theta, int n_trunc);

/// diag(n)
FockOperator number_matrix(int n_trunc);

/// Dispersive coupling -chi a^dag a |e><e|; the conditional pi-phase gate is
/// its evolution for gate_time = pi / chi.
struct DispersiveGateSpec {
    double chi = 1.0;

    double gate_time() const { return M_PI / chi; }
};

enum class ParityGateMode { exact, dispersive };

/// Qubit (x) field pure state, stored as the field branches attached to |g>
/// and |e>.
struct HybridState {
    FockVector g;
    FockVector e;

    double squared_norm() const { return g.squared_norm() + e.squared_norm(); }
};

/// Qubit (x) field density operator in 2x2 block form.
struct HybridDensity {
    Matrix gg, ge, eg, ee;

    double trace() const { return (gg.trace() + ee.trace()).real(); }
    double hermiticity_defect() const;
    /// Most negative eigenvalue of the full 2(N+1)-dimensional operator.
    double min_eigenvalue() const;
};

/// e^{-i pi sigma_y / 4}: |g> -> (|g> + |e>)/sqrt(2), |e> -> (-|g> + |e>)/sqrt(2).
void apply_half_pi_pulse(HybridState &state);
void apply_half_pi_pulse(HybridDensity &rho);

/// Parity flip of the field conditioned on the qubit being in |e>, either as
/// the exact diagonal parity or as dispersive evolution for time pi / chi.
void apply_conditional_parity(HybridState &state, ParityGateMode mode,
                              const DispersiveGateSpec &gate = {});
void apply_conditional_parity(HybridDensity &rho, ParityGateMode mode,
                              const DispersiveGateSpec &gate = {});

/// Full lossless run: cat preparation, rotation by theta, displacement by
/// -alpha0/2, then the two-pulse parity readout. Returns the |g> population.
double run_ideal_sequence(const phase::CoherentLabel &alpha0, double theta, int n_trunc,
                          ParityGateMode mode = ParityGateMode::exact,
                          const DispersiveGateSpec &gate = {});

/// Fixed-step RK4 control for the loss Liouvillian. steps == 0 picks a count
/// from the generator magnitude; the halving check integrates again at twice
/// the resolution and rejects the run if any entry moves more than
/// halving_tol.
struct StepControl {
    int steps = 0;
    bool halving_check = true;
    double halving_tol = 1e-8;
    bool positivity_check = true;
};

struct EvolveDiagnostics {
    double max_trace_defect = 0.0;
    double max_hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
    double halving_delta = 0.0;
    int steps_used = 0;
};

/// Integrates drho/dt = -i eps [a^dag a, rho] + kappa (a rho a^dag
/// - {a^dag a, rho}/2) for time T. Trace and Hermiticity defects are tracked
/// on every accepted step and reported through diag.
Matrix lindblad_evolve(const Matrix &rho, double epsilon, double kappa, double T,
                       const StepControl &control = {}, EvolveDiagnostics *diag = nullptr);

/// Lossy run: cat density matrix, Lindblad evolution over cfg.T, displacement
/// by -alpha0/2, two-pulse readout on the hybrid density. Returns Tr<g|rho|g>.
double run_damped_sequence(const analytic::ProtocolConfig &cfg, int n_trunc,
                           const StepControl &control = {}, EvolveDiagnostics *diag = nullptr);

/// Cutoff that covers every coherent label occurring in the sequence for cfg,
/// with headroom for the displacement.
int sequence_truncation(const analytic::ProtocolConfig &cfg,
                        int ceiling = default_truncation_ceiling);

} // namespace catsense::fock
