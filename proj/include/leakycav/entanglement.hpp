// entanglement.hpp - two-qubit entanglement measures and the monogamy
// check: spin flip, Wootters concurrence, tangle, the pure-state bipartite
// concurrence 2*sqrt(det) and the CKW inequality report.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "leakycav/errors.hpp"
#include "leakycav/hilbert.hpp"

namespace leakycav {

// Round-off eigenvalues of the spin-flipped product above this are clamped
// to zero; anything more negative is treated as a numerical failure.
inline constexpr double concurrence_clamp_tolerance = 1e-10;
inline constexpr double ckw_slack = 1e-9;

struct ConcurrenceResult {
    double value = 0.0;                  // max(0, l1 - l2 - l3 - l4)
    std::array<double, 4> lambdas{};     // descending square-rooted eigenvalues
};

inline double tangle(const ConcurrenceResult& c) { return c.value * c.value; }

struct CkwReport {
    double lhs = 0.0;   // C(C2,C1)^2 + C(C2,A1)^2
    double rhs = 0.0;   // (2 sqrt(det rho_C2))^2
    bool satisfied = false;
    double trace = 0.0; // trace of the tripartite input, diagnostic
};

namespace detail {

inline void require_two_qubits(const DensityMatrix& rho, const char* who) {
    const SpaceSpec& s = rho.space();
    if (s.size() != 2 || s.subsystem(0).dim != 2 || s.subsystem(1).dim != 2) {
        throw ArgumentError(std::string(who) + ": expected a two-qubit state");
    }
}

// sigma_y (x) sigma_y, the antidiagonal (-1, 1, 1, -1).
inline Matrix spin_flip_kernel() {
    Matrix y = Matrix::Zero(4, 4);
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

}  // namespace detail

// rho~ = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
inline DensityMatrix spin_flip(const DensityMatrix& rho) {
    detail::require_two_qubits(rho, "spin_flip");
    static const Matrix y = detail::spin_flip_kernel();
    return DensityMatrix(rho.space(), y * rho.elements().conjugate() * y, rho.checks());
}

// Wootters concurrence. The lambdas are the descending square roots of the
// eigenvalues of rho * rho~. For positive semidefinite input they are
// computed through the Hermitian form sqrt(rho) rho~ sqrt(rho); for the
// mildly indefinite matrices the secular closed forms produce, the product
// spectrum is computed directly (it is still real and nonnegative there).
inline ConcurrenceResult concurrence(const DensityMatrix& rho) {
    detail::require_two_qubits(rho, "concurrence");
    const Matrix flipped = spin_flip(rho).elements();

    Eigen::SelfAdjointEigenSolver<Matrix> state_solver(rho.elements());
    if (state_solver.info() != Eigen::Success) {
        throw NumericalError("concurrence: eigendecomposition of the state failed");
    }

    Eigen::Vector4d mu;  // eigenvalues of rho * rho~, unsorted
    if (state_solver.eigenvalues().minCoeff() >= -concurrence_clamp_tolerance) {
        Eigen::VectorXd ev = state_solver.eigenvalues().cwiseMax(0.0);
        const Matrix sqrt_rho = state_solver.eigenvectors() *
                                ev.cwiseSqrt().asDiagonal() *
                                state_solver.eigenvectors().adjoint();
        Matrix m = sqrt_rho * flipped * sqrt_rho;
        m = 0.5 * (m + m.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<Matrix> product_solver(m);
        if (product_solver.info() != Eigen::Success) {
            throw NumericalError("concurrence: eigendecomposition of the product failed");
        }
        mu = product_solver.eigenvalues();
    } else {
        Eigen::ComplexEigenSolver<Matrix> product_solver(rho.elements() * flipped);
        if (product_solver.info() != Eigen::Success) {
            throw NumericalError("concurrence: eigendecomposition of the product failed");
        }
        const Vector values = product_solver.eigenvalues();
        const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
        for (int k = 0; k < 4; ++k) {
            if (std::abs(values(k).imag()) > 1e-9 * scale) {
                throw NumericalError("concurrence: complex eigenvalue of the spin-flipped "
                                     "product; state is too far from positive");
            }
            mu(k) = values(k).real();
        }
    }

    ConcurrenceResult result;
    for (int k = 0; k < 4; ++k) {
        double v = mu(k);
        if (v < concurrence_clamp_tolerance) {
            // Round-off floor: square roots would otherwise inflate
            // eigenvalue noise of order 1e-16 into lambda errors of 1e-8.
            if (v < -concurrence_clamp_tolerance) {
                throw NumericalError("concurrence: negative eigenvalue " + std::to_string(v) +
                                     " of the spin-flipped product");
            }
            v = 0.0;
        }
        result.lambdas[k] = std::sqrt(v);
    }
    std::sort(result.lambdas.begin(), result.lambdas.end(), std::greater<>());
    result.value = std::max(0.0, result.lambdas[0] - result.lambdas[1] - result.lambdas[2] -
                                     result.lambdas[3]);
    return result;
}

// Bipartite concurrence of a pure composite state from one reduced qubit:
// 2 sqrt(det rho). Exact for pure states; used as the mixed-state
// approximation when the composite stays close to pure. If the reduced
// matrix is visibly trace-deficient the optional flag is raised and the
// value is still computed on the matrix as given.
inline double pure_bipartite_concurrence(const DensityMatrix& rho,
                                         bool* trace_warning = nullptr) {
    if (rho.space().total_dim() != 2) {
        throw ArgumentError("pure_bipartite_concurrence: expected a single-qubit state");
    }
    if (trace_warning != nullptr) {
        *trace_warning = std::abs(rho.trace() - 1.0) > 1e-6;
    }
    const double det = rho.elements().determinant().real();
    return 2.0 * std::sqrt(std::max(0.0, det));
}

// Monogamy inequality for the cavity-cavity-atom system, pivoted on C2:
//   C(C2,C1)^2 + C(C2,A1)^2 <= C(C2|C1 A1)^2
// with the right side evaluated as (2 sqrt(det rho_C2))^2.
inline CkwReport ckw_check(const DensityMatrix& rho_tripartite) {
    const SpaceSpec& space = rho_tripartite.space();
    const bool labels_ok = space.size() == 3 && space.has("C1") && space.has("C2") &&
                           space.has("A1") && space.total_dim() == 8;
    if (!labels_ok) {
        throw ArgumentError("ckw_check: expected a three-qubit state over C1, C2, A1");
    }
    CkwReport report;
    const double c_c2c1 = concurrence(partial_trace(rho_tripartite, {"C1", "C2"})).value;
    const double c_c2a1 = concurrence(partial_trace(rho_tripartite, {"C2", "A1"})).value;
    const double c_outer =
        pure_bipartite_concurrence(partial_trace(rho_tripartite, {"C2"}));
    report.lhs = c_c2c1 * c_c2c1 + c_c2a1 * c_c2a1;
    report.rhs = c_outer * c_outer;
    report.satisfied = report.lhs <= report.rhs + ckw_slack;
    report.trace = rho_tripartite.trace();
    return report;
}

}  // namespace leakycav
