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

#include "fock.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace catsense::fock {

namespace {

constexpr int truncation_floor = 8;

void require_trunc(int n_trunc, const char *who) {
    if (n_trunc < 0) {
        throw Error(errc::invalid_argument, std::string(who) + ": negative truncation");
    }
    if (n_trunc > default_truncation_ceiling) {
        throw Error(errc::resource_limit,
                    std::string(who) + ": truncation exceeds the configured ceiling");
    }
}

} // namespace

int truncation_bound(double alpha_max, double tail_tol, int ceiling) {
    if (!(alpha_max >= 0.0) || !std::isfinite(alpha_max)) {
        throw Error(errc::invalid_argument, "truncation_bound: alpha_max must be >= 0");
    }
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
        throw Error(errc::invalid_argument, "truncation_bound: tail_tol must be in (0, 1)");
    }
    const double lambda = alpha_max * alpha_max;
    if (lambda == 0.0) {
        return truncation_floor;
    }
    const double log_lambda = std::log(lambda);
    double log_p = -lambda; // ln of the Poisson term at n = 0
    for (int n = 1;; ++n) {
        log_p += log_lambda - std::log(static_cast<double>(n));
        if (static_cast<double>(n + 1) > lambda) {
            // tail(n) <= p_{n+1} / (1 - lambda / (n + 2)), a geometric bound
            // valid once the term ratio drops below one.
            const double log_next = log_p + log_lambda - std::log(static_cast<double>(n + 1));
            const double bound = std::exp(log_next) / (1.0 - lambda / (n + 2));
            if (bound < tail_tol) {
                const int result = std::max(n, truncation_floor);
                if (result > ceiling) {
                    throw Error(errc::resource_limit,
                                "truncation_bound: required cutoff exceeds the ceiling");
                }
                return result;
            }
        }
        if (n > ceiling) {
            throw Error(errc::resource_limit,
                        "truncation_bound: required cutoff exceeds the ceiling");
        }
    }
}

double FockVector::mean_photons() const {
    double sum = 0.0;
    for (int n = 0; n <= n_trunc; ++n) {
        sum += n * std::norm(amplitudes(n));
    }
    return sum;
}

FockVector coherent_vector(const phase::CoherentLabel &alpha, int n_trunc) {
    require_trunc(n_trunc, "coherent_vector");
    if (!alpha.is_finite()) {
        throw Error(errc::invalid_argument, "coherent_vector: non-finite label");
    }
    Vector v(n_trunc + 1);
    v(0) = std::exp(-0.5 * alpha.mean_photons());
    for (int n = 1; n <= n_trunc; ++n) {
        v(n) = v(n - 1) * alpha.alpha / std::sqrt(static_cast<double>(n));
    }
    const double captured = v.squaredNorm();
    if (1.0 - captured >= 1e-12) {
        throw Error(errc::truncation_too_small,
                    "coherent_vector: discarded tail mass >= 1e-12 at this cutoff");
    }
    v /= std::sqrt(captured);
    return {std::move(v), n_trunc};
}

FockOperator displacement_matrix(const phase::CoherentLabel &beta, int n_trunc) {
    require_trunc(n_trunc, "displacement_matrix");
    if (!beta.is_finite()) {
        throw Error(errc::invalid_argument, "displacement_matrix: non-finite label");
    }
    const int dim = n_trunc + 1;
    Matrix generator = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        const double root = std::sqrt(static_cast<double>(n));
        generator(n, n - 1) = beta.alpha * root;             // beta a^dag
        generator(n - 1, n) = -std::conj(beta.alpha) * root; // -conj(beta) a
    }

    const double norm1 = generator.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    }
    const Matrix scaled = generator * std::ldexp(1.0, -squarings);

    Matrix result = Matrix::Identity(dim, dim);
    Matrix term = Matrix::Identity(dim, dim);
    for (int k = 1; k <= 24; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        result += term;
    }
    for (int i = 0; i < squarings; ++i) {
        result = result * result;
    }

    // The truncated generator is exactly anti-Hermitian, so the exponential
    // must come out unitary; a column-norm drift flags a numerical problem.
    for (int col = 0; col < dim; ++col) {
        if (std::abs(result.col(col).norm() - 1.0) > 1e-10) {
            throw Error(errc::truncation_too_small,
                        "displacement_matrix: lost unitarity while exponentiating");
        }
    }
    return {std::move(result), OperatorKind::displacement};
}

FockOperator parity_matrix(int n_trunc) {
    require_trunc(n_trunc, "parity_matrix");
    Matrix m = Matrix::Zero(n_trunc + 1, n_trunc + 1);
    for (int n = 0; n <= n_trunc; ++n) {
        m(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    }
    return {std::move(m), OperatorKind::parity};
}

FockOperator rotation_matrix(double theta, int n_trunc) {
    require_trunc(n_trunc, "rotation_matrix");
    Matrix m = Matrix::Zero(n_trunc + 1, n_trunc + 1);
    for (int n = 0; n <= n_trunc; ++n) {
        m(n, n) = std::polar(1.0, theta * n);
    }
    return {std::move(m), OperatorKind::rotation};
}

FockOperator number_matrix(int n_trunc) {
    require_trunc(n_trunc, "number_matrix");
    Matrix m = Matrix::Zero(n_trunc + 1, n_trunc + 1);
    for (int n = 0; n <= n_trunc; ++n) {
        m(n, n) = static_cast<double>(n);
    }
    return {std::move(m), OperatorKind::number};
}

double HybridDensity::hermiticity_defect() const {
    const double diag_defect = std::max((gg - gg.adjoint().eval()).cwiseAbs().maxCoeff(),
                                        (ee - ee.adjoint().eval()).cwiseAbs().maxCoeff());
    const double cross_defect = (ge - eg.adjoint().eval()).cwiseAbs().maxCoeff();
    return std::max(diag_defect, cross_defect);
}

double HybridDensity::min_eigenvalue() const {
    const auto dim = gg.rows();
    Matrix full(2 * dim, 2 * dim);
    full.topLeftCorner(dim, dim) = gg;
    full.topRightCorner(dim, dim) = ge;
    full.bottomLeftCorner(dim, dim) = eg;
    full.bottomRightCorner(dim, dim) = ee;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (full + full.adjoint().eval()),
                                                 Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void apply_half_pi_pulse(HybridState &state) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const Vector g = state.g.amplitudes;
    state.g.amplitudes = inv_sqrt2 * (g - state.e.amplitudes);
    state.e.amplitudes = inv_sqrt2 * (g + state.e.amplitudes);
}

void apply_half_pi_pulse(HybridDensity &rho) {
    const Matrix gg = rho.gg, ge = rho.ge, eg = rho.eg, ee = rho.ee;
    rho.gg = 0.5 * (gg - eg - ge + ee);
    rho.ge = 0.5 * (gg - eg + ge - ee);
    rho.eg = 0.5 * (gg + eg - ge - ee);
    rho.ee = 0.5 * (gg + eg + ge + ee);
}

namespace {

Vector conditional_parity_diagonal(Eigen::Index dim, ParityGateMode mode,
                                   const DispersiveGateSpec &gate) {
    if (mode == ParityGateMode::dispersive && !(gate.chi > 0.0)) {
        throw Error(errc::invalid_argument, "conditional parity: chi must be positive");
    }
    Vector diag(dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        if (mode == ParityGateMode::exact) {
            diag(n) = (n % 2 == 0) ? 1.0 : -1.0;
        } else {
            // exp(-i H_I t) with H_I = -chi n |e><e| and t = pi / chi; chi
            // cancels up to rounding, leaving e^{i pi n}.
            diag(n) = std::polar(1.0, gate.chi * gate.gate_time() * static_cast<double>(n));
        }
    }
    return diag;
}

} // namespace

void apply_conditional_parity(HybridState &state, ParityGateMode mode,
                              const DispersiveGateSpec &gate) {
    const Vector diag = conditional_parity_diagonal(state.e.amplitudes.size(), mode, gate);
    state.e.amplitudes.array() *= diag.array();
}

void apply_conditional_parity(HybridDensity &rho, ParityGateMode mode,
                              const DispersiveGateSpec &gate) {
    const Vector diag = conditional_parity_diagonal(rho.gg.rows(), mode, gate);
    // G = |g><g| x I + |e><e| x Pi, so ge picks up Pi^dag from the right.
    rho.ge = rho.ge * diag.conjugate().asDiagonal();
    rho.eg = diag.asDiagonal() * rho.eg;
    rho.ee = diag.asDiagonal() * rho.ee * diag.conjugate().asDiagonal();
}

namespace {

FockVector cat_vector(const phase::CoherentLabel &alpha0, int n_trunc) {
    const FockVector vac = coherent_vector(phase::CoherentLabel{0.0, 0.0}, n_trunc);
    const FockVector big = coherent_vector(alpha0, n_trunc);
    Vector sum = vac.amplitudes + big.amplitudes;
    sum /= sum.norm();
    return {std::move(sum), n_trunc};
}

void check_norm(double squared_norm, const char *who) {
    if (std::abs(squared_norm - 1.0) > 1e-10) {
        throw Error(errc::truncation_too_small,
                    std::string(who) + ": state norm drifted beyond 1e-10");
    }
}

} // namespace

double run_ideal_sequence(const phase::CoherentLabel &alpha0, double theta, int n_trunc,
                          ParityGateMode mode, const DispersiveGateSpec &gate) {
    FockVector field = cat_vector(alpha0, n_trunc);

    for (int n = 0; n <= n_trunc; ++n) {
        field.amplitudes(n) *= std::polar(1.0, theta * n);
    }
    const FockOperator shift = displacement_matrix(phase::CoherentLabel{-0.5 * alpha0.alpha},
                                                   n_trunc);
    field.amplitudes = shift.matrix * field.amplitudes;
    check_norm(field.squared_norm(), "run_ideal_sequence");

    HybridState hybrid{field, FockVector{Vector::Zero(n_trunc + 1), n_trunc}};
    apply_half_pi_pulse(hybrid);
    apply_conditional_parity(hybrid, mode, gate);
    apply_half_pi_pulse(hybrid);
    check_norm(hybrid.squared_norm(), "run_ideal_sequence");

    return hybrid.g.squared_norm();
}

namespace {

// drho/dt for the detuned single-mode loss channel, written out entrywise:
// the commutator and anticommutator are diagonal in (m - n) and (m + n),
// and a rho a^dag is a shift along the main diagonal.
void loss_rhs(const Matrix &rho, Matrix &out, double epsilon, double kappa,
              const Eigen::VectorXd &root_products) {
    const Eigen::Index dim = rho.rows();
    for (Eigen::Index col = 0; col < dim; ++col) {
        for (Eigen::Index row = 0; row < dim; ++row) {
            out(row, col) = Complex(-0.5 * kappa * static_cast<double>(row + col),
                                    -epsilon * static_cast<double>(row - col)) *
                            rho(row, col);
        }
    }
    if (kappa != 0.0) {
        for (Eigen::Index col = 0; col + 1 < dim; ++col) {
            for (Eigen::Index row = 0; row + 1 < dim; ++row) {
                out(row, col) += kappa * root_products(row) * root_products(col) *
                                 rho(row + 1, col + 1);
            }
        }
    }
}

struct IntegrationPass {
    Matrix state;
    double max_trace_defect = 0.0;
    double max_hermiticity_defect = 0.0;
};

IntegrationPass integrate_fixed(const Matrix &rho0, double epsilon, double kappa, double T,
                                int steps) {
    const Eigen::Index dim = rho0.rows();
    Eigen::VectorXd roots(dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        roots(n) = std::sqrt(static_cast<double>(n + 1));
    }

    IntegrationPass pass{rho0, 0.0, 0.0};
    Matrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), scratch(dim, dim);
    const double h = T / steps;
    for (int step = 0; step < steps; ++step) {
        loss_rhs(pass.state, k1, epsilon, kappa, roots);
        scratch = pass.state + (0.5 * h) * k1;
        loss_rhs(scratch, k2, epsilon, kappa, roots);
        scratch = pass.state + (0.5 * h) * k2;
        loss_rhs(scratch, k3, epsilon, kappa, roots);
        scratch = pass.state + h * k3;
        loss_rhs(scratch, k4, epsilon, kappa, roots);
        pass.state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        pass.max_trace_defect =
            std::max(pass.max_trace_defect, std::abs(pass.state.trace().real() - 1.0));
        pass.max_hermiticity_defect =
            std::max(pass.max_hermiticity_defect,
                     (pass.state - pass.state.adjoint().eval()).cwiseAbs().maxCoeff());
    }
    return pass;
}

int auto_step_count(double epsilon, double kappa, double T, Eigen::Index dim) {
    // Fifth-order local error with generator magnitude ~ (|eps| + 2 kappa) dim;
    // target the halving delta an order below the 1e-8 rejection threshold.
    const double strength = (std::abs(epsilon) + 2.0 * kappa) * T * static_cast<double>(dim);
    const double needed = std::pow(std::pow(strength, 5) / (120.0 * 1e-9), 0.25);
    return std::clamp(static_cast<int>(std::ceil(needed)), 400, 200000);
}

} // namespace

Matrix lindblad_evolve(const Matrix &rho, double epsilon, double kappa, double T,
                       const StepControl &control, EvolveDiagnostics *diag) {
    if (rho.rows() != rho.cols()) {
        throw Error(errc::invalid_argument, "lindblad_evolve: density matrix must be square");
    }
    if (kappa < 0.0 || T < 0.0) {
        throw Error(errc::invalid_argument, "lindblad_evolve: kappa and T must be >= 0");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-8) {
        throw Error(errc::invalid_argument, "lindblad_evolve: input trace must be 1");
    }
    if (T == 0.0) {
        return rho;
    }

    const int steps =
        control.steps > 0 ? control.steps : auto_step_count(epsilon, kappa, T, rho.rows());
    IntegrationPass coarse = integrate_fixed(rho, epsilon, kappa, T, steps);
    double halving_delta = 0.0;
    IntegrationPass fine;
    if (control.halving_check) {
        fine = integrate_fixed(rho, epsilon, kappa, T, 2 * steps);
        halving_delta = (fine.state - coarse.state).cwiseAbs().maxCoeff();
        if (halving_delta > control.halving_tol) {
            throw Error(errc::step_size_failure,
                        "lindblad_evolve: halving the step moved an entry by more than the "
                        "tolerance");
        }
    } else {
        fine = std::move(coarse);
    }

    if (diag != nullptr) {
        diag->max_trace_defect = fine.max_trace_defect;
        diag->max_hermiticity_defect = fine.max_hermiticity_defect;
        diag->halving_delta = halving_delta;
        diag->steps_used = control.halving_check ? 2 * steps : steps;
        diag->min_eigenvalue = 0.0;
    }
    if (control.positivity_check) {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(
            0.5 * (fine.state + fine.state.adjoint().eval()), Eigen::EigenvaluesOnly);
        const double min_eig = solver.eigenvalues().minCoeff();
        if (diag != nullptr) {
            diag->min_eigenvalue = min_eig;
        }
        if (min_eig < -1e-9) {
            throw Error(errc::step_size_failure,
                        "lindblad_evolve: integrated state lost positivity");
        }
    }
    return std::move(fine.state);
}

double run_damped_sequence(const analytic::ProtocolConfig &cfg, int n_trunc,
                           const StepControl &control, EvolveDiagnostics *diag) {
    const FockVector cat = cat_vector(cfg.alpha0, n_trunc);
    Matrix rho = cat.amplitudes * cat.amplitudes.adjoint();

    rho = lindblad_evolve(rho, cfg.epsilon, cfg.kappa, cfg.T, control, diag);

    const FockOperator shift =
        displacement_matrix(phase::CoherentLabel{-0.5 * cfg.alpha0.alpha}, n_trunc);
    rho = shift.matrix * rho * shift.matrix.adjoint();

    const Eigen::Index dim = rho.rows();
    HybridDensity hybrid{rho, Matrix::Zero(dim, dim), Matrix::Zero(dim, dim),
                         Matrix::Zero(dim, dim)};
    apply_half_pi_pulse(hybrid);
    apply_conditional_parity(hybrid, ParityGateMode::exact);
    apply_half_pi_pulse(hybrid);
    if (std::abs(hybrid.trace() - 1.0) > 1e-9) {
        throw Error(errc::truncation_too_small, "run_damped_sequence: readout lost trace");
    }
    return hybrid.gg.trace().real();
}

int sequence_truncation(const analytic::ProtocolConfig &cfg, int ceiling) {
    const auto field = analytic::damp_and_displace(cfg);
    const double alpha_max =
        std::max({std::abs(cfg.alpha0.alpha), std::abs(field.label_ref.alpha),
                  std::abs(field.label_sig.alpha)});
    const int margin = 16;
    const int bound = truncation_bound(alpha_max, 1e-14, ceiling - margin);
    return bound + margin;
}

} // namespace catsense::fock
