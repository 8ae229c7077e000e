// dynamics.hpp - resonant Jaynes-Cummings Hamiltonians and state evolution:
// exact unitary propagation, the real-phase Rabi rotation, and a fixed-step
// RK4 integrator for the zero-temperature Lindblad master equation.
//
// Times are Rabi angles (g*t) and every rate is expressed in units of g,
// i.e. the library works with g = 1 unless CouplingParams says otherwise.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leakycav/errors.hpp"
#include "leakycav/hilbert.hpp"

namespace leakycav {

inline constexpr double hamiltonian_hermiticity_tolerance = 1e-10;
inline constexpr double default_step_guard = 0.01;   // dt*g ceiling
inline constexpr double trace_drift_tolerance = 1e-8;

struct CouplingParams {
    double g = 1.0;  // atom-field coupling rate, units 1/time
    std::vector<std::pair<std::string, std::string>> pairs;  // (cavity, atom)
};

// Cavity leakage constants kappa >= 0 per cavity label; atoms never decay.
struct DissipationParams {
    std::map<std::string, double> kappa;
};

enum class IntegrationMethod { rk4 };

struct IntegratorConfig {
    double dt = 1e-3;  // step size in units of 1/g
    IntegrationMethod method = IntegrationMethod::rk4;
    double positivity_tol = 1e-7;
    bool renormalize_trace = false;
    bool allow_large_steps = false;  // lifts the dt <= 0.01 guard
};

// H = g * sum over pairs of (sigma+ a + sigma- a†), resonant coupling in
// the rotating-wave approximation. Conserves the total excitation number.
inline OperatorMatrix build_jc_hamiltonian(const SpaceSpec& space,
                                           const CouplingParams& params) {
    if (params.g <= 0.0) {
        throw ConfigurationError("build_jc_hamiltonian: coupling g must be positive");
    }
    std::vector<std::string> used;
    const int d = space.total_dim();
    Matrix h = Matrix::Zero(d, d);
    for (const auto& [cavity_name, atom_name] : params.pairs) {
        for (const auto& name : {cavity_name, atom_name}) {
            if (!space.has(name)) {
                throw ConfigurationError("build_jc_hamiltonian: no subsystem named " + name);
            }
            if (std::find(used.begin(), used.end(), name) != used.end()) {
                throw ConfigurationError("build_jc_hamiltonian: " + name +
                                         " appears in more than one pair");
            }
            used.push_back(name);
        }
        const SubsystemLabel& cavity = space.subsystem(space.position(cavity_name));
        const SubsystemLabel& atom = space.subsystem(space.position(atom_name));
        if (cavity.kind != SubsystemKind::cavity_mode) {
            throw ConfigurationError("build_jc_hamiltonian: " + cavity_name +
                                     " is not a cavity mode");
        }
        if (atom.kind != SubsystemKind::two_level_atom) {
            throw ConfigurationError("build_jc_hamiltonian: " + atom_name +
                                     " is not a two-level atom");
        }
        const Matrix raise = embed(sigma_plus(atom), space, atom_name).elements();
        const Matrix lower = embed(annihilation_operator(cavity), space, cavity_name).elements();
        const Matrix term = raise * lower;
        h += params.g * (term + term.adjoint());
    }
    return OperatorMatrix(space, std::move(h));
}

// Total excitation number sum(a†a) + sum(sigma+ sigma-), conserved by the
// resonant interaction.
inline OperatorMatrix excitation_number_operator(const SpaceSpec& space) {
    const int d = space.total_dim();
    Matrix n = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const std::vector<int> digits = space.decode(i);
        double total = 0.0;
        for (std::size_t k = 0; k < space.size(); ++k) total += digits[k];
        n(i, i) = total;
    }
    return OperatorMatrix(space, std::move(n));
}

namespace detail {

inline void require_hermitian(const Matrix& h, const char* who) {
    const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (dev > hamiltonian_hermiticity_tolerance) {
        throw NumericalError(std::string(who) + ": Hamiltonian is not Hermitian (max deviation " +
                             std::to_string(dev) + ")");
    }
}

// exp(-i H t) via eigendecomposition of the Hermitian H.
inline Matrix propagator(const OperatorMatrix& h, double t) {
    require_hermitian(h.elements(), "evolve_unitary");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.elements());
    if (solver.info() != Eigen::Success) {
        throw NumericalError("evolve_unitary: eigendecomposition failed");
    }
    const Eigen::VectorXd& ev = solver.eigenvalues();
    Vector phases(ev.size());
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        phases(k) = std::exp(Complex(0.0, -ev(k) * t));
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace detail

inline Ket evolve_unitary(const Ket& state, const OperatorMatrix& h, double t) {
    if (!(state.space() == h.space())) {
        throw ArgumentError("evolve_unitary: state and Hamiltonian spaces differ");
    }
    return Ket(state.space(), detail::propagator(h, t) * state.amplitudes(),
               state.normalized());
}

inline DensityMatrix evolve_unitary(const DensityMatrix& state, const OperatorMatrix& h,
                                    double t) {
    if (!(state.space() == h.space())) {
        throw ArgumentError("evolve_unitary: state and Hamiltonian spaces differ");
    }
    const Matrix u = detail::propagator(h, t);
    return DensityMatrix(state.space(), u * state.elements() * u.adjoint(), state.checks());
}

// Real-phase Rabi rotation on one resonant cavity-atom pair:
//   |e,0> -> cos(gt)|e,0> + sin(gt)|g,1>
//   |g,1> -> cos(gt)|g,1> - sin(gt)|e,0>
//   |g,0> -> |g,0>
// Matches exp(-iHt) in all amplitude magnitudes on the single-excitation
// sector; the exact propagator carries -i phases on the cross terms
// instead. The caller is responsible for staying inside that sector.
inline Ket rabi_rotation(const Ket& state, const std::string& cavity_name,
                         const std::string& atom_name, double gt) {
    const SpaceSpec& space = state.space();
    const std::size_t cavity_pos = space.position(cavity_name);
    const std::size_t atom_pos = space.position(atom_name);
    if (space.subsystem(cavity_pos).kind != SubsystemKind::cavity_mode ||
        space.subsystem(atom_pos).kind != SubsystemKind::two_level_atom) {
        throw ArgumentError("rabi_rotation: pair must be (cavity, atom)");
    }
    const double c = std::cos(gt);
    const double s = std::sin(gt);
    Vector out = state.amplitudes();
    for (int i = 0; i < space.total_dim(); ++i) {
        std::vector<int> digits = space.decode(i);
        if (digits[cavity_pos] != 0 || digits[atom_pos] != 1) continue;  // i is |e,0>
        digits[cavity_pos] = 1;
        digits[atom_pos] = 0;
        const int j = space.encode(digits);  // j is |g,1>
        const Complex ae = state.amplitudes()(i);
        const Complex ag = state.amplitudes()(j);
        out(i) = c * ae - s * ag;
        out(j) = s * ae + c * ag;
    }
    return Ket(space, std::move(out), state.normalized());
}

namespace detail {

// Prebuilt Lindblad generator: rhs = -i[H, rho] + sum_j kappa_j
// (2 a_j rho a_j† - a_j†a_j rho - rho a_j†a_j).
struct LindbladGenerator {
    Matrix h;
    std::vector<double> rates;
    std::vector<Matrix> jumps;      // a_j
    std::vector<Matrix> jump_dags;  // a_j†
    std::vector<Matrix> numbers;    // a_j† a_j

    LindbladGenerator(const SpaceSpec& space, const OperatorMatrix& hamiltonian,
                      const DissipationParams& diss)
        : h(hamiltonian.elements()) {
        if (!(space == hamiltonian.space())) {
            throw ArgumentError("lindblad: Hamiltonian space mismatch");
        }
        for (const auto& [name, kappa] : diss.kappa) {
            if (kappa < 0.0) {
                throw ConfigurationError("lindblad: negative leakage constant for " + name);
            }
            if (!space.has(name)) {
                throw ConfigurationError("lindblad: no subsystem named " + name);
            }
            const SubsystemLabel& label = space.subsystem(space.position(name));
            if (label.kind != SubsystemKind::cavity_mode) {
                throw ConfigurationError("lindblad: dissipation on " + name +
                                         ", which is not a cavity mode");
            }
            if (kappa == 0.0) continue;
            Matrix a = embed(annihilation_operator(label), space, name).elements();
            rates.push_back(kappa);
            jump_dags.push_back(a.adjoint());
            numbers.push_back(a.adjoint() * a);
            jumps.push_back(std::move(a));
        }
    }

    Matrix apply(const Matrix& rho) const {
        Matrix out = Complex(0.0, -1.0) * (h * rho - rho * h);
        for (std::size_t j = 0; j < rates.size(); ++j) {
            out += rates[j] * (2.0 * (jumps[j] * rho * jump_dags[j]) -
                               numbers[j] * rho - rho * numbers[j]);
        }
        return out;
    }
};

}  // namespace detail

// Right-hand side of the master equation at a single instant.
inline Matrix lindblad_rhs(const DensityMatrix& rho, const OperatorMatrix& h,
                           const DissipationParams& diss) {
    if (!(rho.space() == h.space())) {
        throw ArgumentError("lindblad_rhs: state and Hamiltonian spaces differ");
    }
    return detail::LindbladGenerator(rho.space(), h, diss).apply(rho.elements());
}

// Classical fixed-step RK4 integration of the master equation, sampling at
// the requested times (and at t_final when no samples are given). Each step
// is followed by Hermitization rho <- (rho + rho†)/2; positivity is checked
// at every sample and reported, never clipped.
inline std::vector<std::pair<double, DensityMatrix>> integrate_master_equation(
    const DensityMatrix& rho0, const OperatorMatrix& h, const DissipationParams& diss,
    double t_final, const IntegratorConfig& cfg = {},
    std::vector<double> sample_times = {}) {
    if (t_final < 0.0) {
        throw ArgumentError("integrate_master_equation: t_final must be >= 0");
    }
    if (cfg.dt <= 0.0) {
        throw ConfigurationError("integrate_master_equation: dt must be positive");
    }
    if (!cfg.allow_large_steps && cfg.dt > default_step_guard * (1.0 + 1e-12)) {
        throw ConfigurationError(
            "integrate_master_equation: dt exceeds the step guard dt*g <= 0.01; "
            "set allow_large_steps to override");
    }
    if (sample_times.empty()) {
        sample_times.push_back(t_final);
    }
    std::sort(sample_times.begin(), sample_times.end());
    sample_times.erase(std::unique(sample_times.begin(), sample_times.end()),
                       sample_times.end());
    if (sample_times.front() < 0.0 || sample_times.back() > t_final + 1e-12) {
        throw ArgumentError("integrate_master_equation: sample times outside [0, t_final]");
    }

    detail::require_hermitian(h.elements(), "integrate_master_equation");
    const detail::LindbladGenerator gen(rho0.space(), h, diss);

    const double initial_trace = rho0.trace();
    Matrix rho = rho0.elements();
    double t = 0.0;

    std::vector<std::pair<double, DensityMatrix>> samples;
    samples.reserve(sample_times.size());

    auto record = [&](double at) {
        DensityMatrix state(rho0.space(), rho, StateChecks::hermitian_only);
        const double lowest = state.min_eigenvalue();
        if (lowest < -cfg.positivity_tol) {
            throw NumericalError("integrate_master_equation: positivity violated (eigenvalue " +
                                     std::to_string(lowest) + ")",
                                 at);
        }
        samples.emplace_back(at, std::move(state));
    };

    for (double target : sample_times) {
        const double gap = target - t;
        if (gap > 1e-15) {
            const int steps = std::max(1, static_cast<int>(std::ceil(gap / cfg.dt - 1e-12)));
            const double hstep = gap / steps;
            for (int s = 0; s < steps; ++s) {
                const Matrix k1 = gen.apply(rho);
                const Matrix k2 = gen.apply(rho + (hstep / 2.0) * k1);
                const Matrix k3 = gen.apply(rho + (hstep / 2.0) * k2);
                const Matrix k4 = gen.apply(rho + hstep * k3);
                rho += (hstep / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                rho = 0.5 * (rho + rho.adjoint().eval());
                if (cfg.renormalize_trace) {
                    rho /= rho.trace().real();
                }
            }
            t = target;
        }
        record(target);
    }

    if (!cfg.renormalize_trace && cfg.dt <= default_step_guard) {
        const double drift = std::abs(rho.trace().real() - initial_trace);
        if (drift > trace_drift_tolerance) {
            throw NumericalError("integrate_master_equation: trace drift " +
                                     std::to_string(drift),
                                 t);
        }
    }
    return samples;
}

}  // namespace leakycav
