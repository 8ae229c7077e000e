// scenarios.hpp - closed-form states and derived curves for the two
// standard set-ups: a pair of entangled cavities probed by one ground-state
// atom (tripartite monogamy) and by two atoms simultaneously (entanglement
// swapping), each with and without cavity leakage. The dissipative states
// come from the secular-approximation solution of the master equation,
// parameterized by six coefficients alpha_1..alpha_6.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leakycav/dynamics.hpp"
#include "leakycav/entanglement.hpp"
#include "leakycav/errors.hpp"
#include "leakycav/hilbert.hpp"

namespace leakycav {

inline constexpr double pipeline_tolerance = 1e-10;
inline constexpr double assembly_tolerance = 1e-12;

// Two cavities and the atom crossing the first one.
inline SpaceSpec tripartite_space(int cavity_levels = 2) {
    return SpaceSpec({{"C1", SubsystemKind::cavity_mode, cavity_levels},
                      {"C2", SubsystemKind::cavity_mode, cavity_levels},
                      {"A1", SubsystemKind::two_level_atom, 2}});
}

// Two cavities, each crossed by its own atom.
inline SpaceSpec quadripartite_space(int cavity_levels = 2) {
    return SpaceSpec({{"C1", SubsystemKind::cavity_mode, cavity_levels},
                      {"C2", SubsystemKind::cavity_mode, cavity_levels},
                      {"A1", SubsystemKind::two_level_atom, 2},
                      {"A2", SubsystemKind::two_level_atom, 2}});
}

// How to evaluate the secular coefficient set. `verbatim` uses the closed
// forms unchanged; their alpha_5 does not reduce to the lossless reduced
// states as kappa -> 0 (a factor-2 / power mismatch), so `limit_consistent`
// rescales alpha_5 to restore that limit. Nothing else differs.
enum class AlphaMode { verbatim, limit_consistent };
enum class AlphaScenario { tripartite, quadripartite };

struct AlphaSet {
    std::array<Complex, 6> alpha{};
    AlphaScenario scenario = AlphaScenario::tripartite;
    AlphaMode mode = AlphaMode::verbatim;
    double gt = 0.0;
    double kappa1_over_g = 0.0;
    double kappa2_over_g = 0.0;
};

// ---------------------------------------------------------------------------
// Ideal (lossless) states and concurrences
// ---------------------------------------------------------------------------

// (|0 1 g> + cos(gt)|1 0 g> - sin(gt)|0 0 e>) / sqrt(2)
inline Ket ideal_tripartite_state(double gt) {
    const SpaceSpec space = tripartite_space();
    Vector v = Vector::Zero(space.total_dim());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    v(space.encode(std::array{0, 1, 0})) = inv_sqrt2;
    v(space.encode(std::array{1, 0, 0})) = std::cos(gt) * inv_sqrt2;
    v(space.encode(std::array{0, 0, 1})) = -std::sin(gt) * inv_sqrt2;
    return Ket(space, std::move(v));
}

// (cos|0 1 g g> - sin|0 0 g e> + cos|1 0 g g> - sin|0 0 e g>) / sqrt(2)
inline Ket ideal_quadripartite_state(double gt) {
    const SpaceSpec space = quadripartite_space();
    Vector v = Vector::Zero(space.total_dim());
    const double c = std::cos(gt) / std::sqrt(2.0);
    const double s = std::sin(gt) / std::sqrt(2.0);
    v(space.encode(std::array{0, 1, 0, 0})) = c;
    v(space.encode(std::array{0, 0, 0, 1})) = -s;
    v(space.encode(std::array{1, 0, 0, 0})) = c;
    v(space.encode(std::array{0, 0, 1, 0})) = -s;
    return Ket(space, std::move(v));
}

struct TripartiteReduced {
    DensityMatrix c1c2;
    DensityMatrix c2a1;
    DensityMatrix c1a1;
};

struct SwapReduced {
    DensityMatrix c1c2;
    DensityMatrix a1a2;
};

namespace detail {

inline SpaceSpec pair_space(const char* first, SubsystemKind first_kind, const char* second,
                            SubsystemKind second_kind) {
    return SpaceSpec({{first, first_kind, 2}, {second, second_kind, 2}});
}

inline SpaceSpec cavity_pair_space() {
    return pair_space("C1", SubsystemKind::cavity_mode, "C2", SubsystemKind::cavity_mode);
}

inline SpaceSpec atom_pair_space() {
    return pair_space("A1", SubsystemKind::two_level_atom, "A2", SubsystemKind::two_level_atom);
}

}  // namespace detail

// Closed-form reduced pair states of the ideal tripartite state.
inline TripartiteReduced ideal_tripartite_reduced(double gt) {
    const double c = std::cos(gt);
    const double s = std::sin(gt);

    Matrix m_c1c2 = Matrix::Zero(4, 4);
    m_c1c2(1, 1) = 0.5;
    m_c1c2(2, 2) = c * c / 2.0;
    m_c1c2(0, 0) = s * s / 2.0;
    m_c1c2(1, 2) = m_c1c2(2, 1) = c / 2.0;

    Matrix m_c2a1 = Matrix::Zero(4, 4);
    m_c2a1(2, 2) = 0.5;
    m_c2a1(0, 0) = c * c / 2.0;
    m_c2a1(1, 1) = s * s / 2.0;
    m_c2a1(2, 1) = m_c2a1(1, 2) = -s / 2.0;

    Matrix m_c1a1 = Matrix::Zero(4, 4);
    m_c1a1(0, 0) = 0.5;
    m_c1a1(2, 2) = c * c / 2.0;
    m_c1a1(1, 1) = s * s / 2.0;
    m_c1a1(2, 1) = m_c1a1(1, 2) = -s * c / 2.0;

    return {DensityMatrix(detail::cavity_pair_space(), std::move(m_c1c2)),
            DensityMatrix(detail::pair_space("C2", SubsystemKind::cavity_mode, "A1",
                                             SubsystemKind::two_level_atom),
                          std::move(m_c2a1)),
            DensityMatrix(detail::pair_space("C1", SubsystemKind::cavity_mode, "A1",
                                             SubsystemKind::two_level_atom),
                          std::move(m_c1a1))};
}

// Closed-form reduced pair states of the ideal swapping state.
inline SwapReduced ideal_swap_reduced(double gt) {
    const double c2 = std::cos(gt) * std::cos(gt);
    const double s2 = std::sin(gt) * std::sin(gt);

    Matrix m_c1c2 = Matrix::Zero(4, 4);
    m_c1c2(1, 1) = c2 / 2.0;
    m_c1c2(2, 2) = c2 / 2.0;
    m_c1c2(0, 0) = s2;
    m_c1c2(1, 2) = m_c1c2(2, 1) = c2 / 2.0;

    Matrix m_a1a2 = Matrix::Zero(4, 4);
    m_a1a2(0, 0) = c2;
    m_a1a2(1, 1) = s2 / 2.0;
    m_a1a2(2, 2) = s2 / 2.0;
    m_a1a2(1, 2) = m_a1a2(2, 1) = s2 / 2.0;

    return {DensityMatrix(detail::cavity_pair_space(), std::move(m_c1c2)),
            DensityMatrix(detail::atom_pair_space(), std::move(m_a1a2))};
}

struct TripartiteConcurrences {
    double c1c2 = 0.0;
    double c2a1 = 0.0;
    double c1a1 = 0.0;
};

// (|cos gt|, |sin gt|, |cos gt sin gt|), verified against the full
// state -> partial trace -> concurrence pipeline.
inline TripartiteConcurrences ideal_tripartite_concurrences(double gt) {
    TripartiteConcurrences closed{std::abs(std::cos(gt)), std::abs(std::sin(gt)),
                                  std::abs(std::cos(gt) * std::sin(gt))};
    const DensityMatrix rho = ideal_tripartite_state(gt).density_matrix();
    const double p_c1c2 = concurrence(partial_trace(rho, {"C1", "C2"})).value;
    const double p_c2a1 = concurrence(partial_trace(rho, {"C2", "A1"})).value;
    const double p_c1a1 = concurrence(partial_trace(rho, {"C1", "A1"})).value;
    if (std::abs(p_c1c2 - closed.c1c2) > pipeline_tolerance ||
        std::abs(p_c2a1 - closed.c2a1) > pipeline_tolerance ||
        std::abs(p_c1a1 - closed.c1a1) > pipeline_tolerance) {
        throw ConsistencyError("ideal_tripartite_concurrences: closed forms disagree with the "
                               "partial-trace pipeline at gt=" + std::to_string(gt));
    }
    return closed;
}

struct SwapConcurrences {
    double c1c2 = 0.0;
    double a1a2 = 0.0;
};

// (cos^2 gt, sin^2 gt), verified against the pipeline through the reduced
// pair states.
inline SwapConcurrences ideal_swap_concurrences(double gt) {
    const double c2 = std::cos(gt) * std::cos(gt);
    const SwapConcurrences closed{c2, 1.0 - c2};
    const DensityMatrix rho = ideal_quadripartite_state(gt).density_matrix();
    const DensityMatrix traced_cavities = partial_trace(rho, {"C1", "C2"});
    const DensityMatrix traced_atoms = partial_trace(rho, {"A1", "A2"});
    const SwapReduced printed = ideal_swap_reduced(gt);
    const double form_dev = std::max(
        (traced_cavities.elements() - printed.c1c2.elements()).cwiseAbs().maxCoeff(),
        (traced_atoms.elements() - printed.a1a2.elements()).cwiseAbs().maxCoeff());
    const double p_c1c2 = concurrence(traced_cavities).value;
    const double p_a1a2 = concurrence(traced_atoms).value;
    if (form_dev > pipeline_tolerance || std::abs(p_c1c2 - closed.c1c2) > pipeline_tolerance ||
        std::abs(p_a1a2 - closed.a1a2) > pipeline_tolerance) {
        throw ConsistencyError("ideal_swap_concurrences: closed forms disagree with the "
                               "partial-trace pipeline at gt=" + std::to_string(gt));
    }
    return closed;
}

// ---------------------------------------------------------------------------
// Secular coefficient sets
// ---------------------------------------------------------------------------

// Coefficients of the dissipative tripartite state. Time enters as the Rabi
// angle, loss as kappa/g, so every exponent is a product of the two.
inline AlphaSet alpha_tripartite(double gt, double kappa1_over_g, double kappa2_over_g,
                                 AlphaMode mode = AlphaMode::verbatim) {
    if (kappa1_over_g < 0.0 || kappa2_over_g < 0.0) {
        throw ArgumentError("alpha_tripartite: kappa/g must be >= 0");
    }
    const double c = std::cos(gt);
    const double s = std::sin(gt);
    const double e1 = std::exp(-kappa1_over_g * gt);
    const double e1h = std::exp(-kappa1_over_g * gt / 2.0);
    const double e2 = std::exp(-kappa2_over_g * gt);
    const double e22 = std::exp(-2.0 * kappa2_over_g * gt);
    const Complex i(0.0, 1.0);

    AlphaSet set;
    set.scenario = AlphaScenario::tripartite;
    set.mode = mode;
    set.gt = gt;
    set.kappa1_over_g = kappa1_over_g;
    set.kappa2_over_g = kappa2_over_g;
    set.alpha[0] = (1.0 - e1 / 2.0) * e22;
    set.alpha[1] = c * c * e1 * (1.0 - e22 / 2.0);
    set.alpha[2] = s * s * e1 * (1.0 - e22 / 2.0);
    set.alpha[3] = c * e1h * e2 / 2.0;
    set.alpha[4] = i * std::sin(2.0 * gt) * e1 * (1.0 - e22 / 2.0);
    set.alpha[5] = i * (e1h * s / 2.0 - kappa1_over_g * e1h * c / 4.0 + kappa1_over_g / 4.0) * e2;
    if (mode == AlphaMode::limit_consistent) {
        set.alpha[4] /= 2.0;
    }
    return set;
}

// Coefficients of the dissipative four-party state. alpha_6 is a product of
// one bracket per atom.
inline AlphaSet alpha_quadripartite(double gt, double kappa1_over_g, double kappa2_over_g,
                                    AlphaMode mode = AlphaMode::verbatim) {
    if (kappa1_over_g < 0.0 || kappa2_over_g < 0.0) {
        throw ArgumentError("alpha_quadripartite: kappa/g must be >= 0");
    }
    const double c = std::cos(gt);
    const double s = std::sin(gt);
    const double e1 = std::exp(-kappa1_over_g * gt);
    const double e1h = std::exp(-kappa1_over_g * gt / 2.0);
    const double e2 = std::exp(-kappa2_over_g * gt);
    const double e2h = std::exp(-kappa2_over_g * gt / 2.0);

    AlphaSet set;
    set.scenario = AlphaScenario::quadripartite;
    set.mode = mode;
    set.gt = gt;
    set.kappa1_over_g = kappa1_over_g;
    set.kappa2_over_g = kappa2_over_g;
    set.alpha[0] = (1.0 - e1 / 2.0) * e2 * c * c;
    set.alpha[1] = s * s * e2 * (1.0 - e1 / 2.0);
    set.alpha[2] = c * c * e1 * (1.0 - e2 / 2.0);
    set.alpha[3] = s * s * e1 * (1.0 - e2 / 2.0);
    set.alpha[4] = (mode == AlphaMode::limit_consistent) ? c * c * e1h * e2h / 2.0
                                                         : c * e1h * e2h / 2.0;
    set.alpha[5] = ((e1h * s - kappa1_over_g * e1h / 2.0 + kappa1_over_g / 2.0) / 2.0) *
                   (e2h * s - kappa2_over_g * e2h / 2.0 + kappa2_over_g / 2.0);
    return set;
}

// ---------------------------------------------------------------------------
// Dissipative state assembly
// ---------------------------------------------------------------------------

namespace detail {

inline void require_scenario(const AlphaSet& set, AlphaScenario expected, const char* who) {
    if (set.scenario != expected) {
        throw ArgumentError(std::string(who) + ": coefficient set built for the wrong scenario");
    }
}

inline DensityMatrix assemble(SpaceSpec space, Matrix m, const char* who) {
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > assembly_tolerance) {
        throw AssemblyError(std::string(who) + ": assembled matrix is not Hermitian "
                            "(max deviation " + std::to_string(dev) + ")");
    }
    // The secular forms are trace-deficient with loss and can be mildly
    // indefinite, so only Hermiticity is enforced here.
    return DensityMatrix(std::move(space), std::move(m), StateChecks::hermitian_only);
}

}  // namespace detail

// Dissipative tripartite state on the 8-dimensional space. Its trace is
// alpha_1 + alpha_2 + alpha_3, below one with loss: the secular expansion
// omits the ground state the leaked excitation decays into.
inline DensityMatrix dissipative_tripartite_state(const AlphaSet& set) {
    detail::require_scenario(set, AlphaScenario::tripartite, "dissipative_tripartite_state");
    const SpaceSpec space = tripartite_space();
    const int i01g = space.encode(std::array{0, 1, 0});
    const int i10g = space.encode(std::array{1, 0, 0});
    const int i00e = space.encode(std::array{0, 0, 1});
    const auto& a = set.alpha;

    Matrix m = Matrix::Zero(8, 8);
    m(i01g, i01g) = a[0];
    m(i10g, i10g) = a[1];
    m(i00e, i00e) = a[2];
    m(i01g, i10g) = a[3];
    m(i10g, i01g) = a[3];
    m(i10g, i00e) = a[4];
    m(i00e, i10g) = -a[4];
    m(i00e, i01g) = a[5];
    m(i01g, i00e) = -a[5];
    return detail::assemble(space, std::move(m), "dissipative_tripartite_state");
}

// Reduced pair states of the dissipative tripartite state, built from the
// closed forms and cross-checked against the partial trace of the
// assembled state.
inline TripartiteReduced dissipative_tripartite_reduced(const AlphaSet& set) {
    detail::require_scenario(set, AlphaScenario::tripartite, "dissipative_tripartite_reduced");
    const auto& a = set.alpha;

    Matrix m_c1c2 = Matrix::Zero(4, 4);
    m_c1c2(1, 1) = a[0];
    m_c1c2(2, 2) = a[1];
    m_c1c2(0, 0) = a[2];
    m_c1c2(1, 2) = a[3];
    m_c1c2(2, 1) = a[3];

    Matrix m_c2a1 = Matrix::Zero(4, 4);
    m_c2a1(2, 2) = a[0];
    m_c2a1(0, 0) = a[1];
    m_c2a1(1, 1) = a[2];
    m_c2a1(2, 1) = -a[5];
    m_c2a1(1, 2) = a[5];

    Matrix m_c1a1 = Matrix::Zero(4, 4);
    m_c1a1(0, 0) = a[0];
    m_c1a1(2, 2) = a[1];
    m_c1a1(1, 1) = a[2];
    m_c1a1(2, 1) = a[4];
    m_c1a1(1, 2) = -a[4];

    TripartiteReduced reduced{
        detail::assemble(detail::cavity_pair_space(), std::move(m_c1c2),
                         "dissipative_tripartite_reduced"),
        detail::assemble(detail::pair_space("C2", SubsystemKind::cavity_mode, "A1",
                                            SubsystemKind::two_level_atom),
                         std::move(m_c2a1), "dissipative_tripartite_reduced"),
        detail::assemble(detail::pair_space("C1", SubsystemKind::cavity_mode, "A1",
                                            SubsystemKind::two_level_atom),
                         std::move(m_c1a1), "dissipative_tripartite_reduced")};

    const DensityMatrix full = dissipative_tripartite_state(set);
    const double dev = std::max(
        {(partial_trace(full, {"C1", "C2"}).elements() - reduced.c1c2.elements())
             .cwiseAbs()
             .maxCoeff(),
         (partial_trace(full, {"C2", "A1"}).elements() - reduced.c2a1.elements())
             .cwiseAbs()
             .maxCoeff(),
         (partial_trace(full, {"C1", "A1"}).elements() - reduced.c1a1.elements())
             .cwiseAbs()
             .maxCoeff()});
    if (dev > assembly_tolerance) {
        throw ConsistencyError("dissipative_tripartite_reduced: closed forms disagree with the "
                               "partial trace of the assembled state");
    }
    return reduced;
}

// Reduced pair states of the dissipative four-party state. Only these two
// matrices are defined by the secular closed form; the full 16x16 state is
// obtained from the master-equation integrator when needed.
inline SwapReduced dissipative_swap_reduced(const AlphaSet& set) {
    detail::require_scenario(set, AlphaScenario::quadripartite, "dissipative_swap_reduced");
    const auto& a = set.alpha;

    Matrix m_c1c2 = Matrix::Zero(4, 4);
    m_c1c2(1, 1) = a[0];
    m_c1c2(2, 2) = a[2];
    m_c1c2(0, 0) = a[1] + a[3];
    m_c1c2(1, 2) = a[4];
    m_c1c2(2, 1) = a[4];

    Matrix m_a1a2 = Matrix::Zero(4, 4);
    m_a1a2(0, 0) = a[0] + a[2];
    m_a1a2(1, 1) = a[1];
    m_a1a2(2, 2) = a[3];
    m_a1a2(1, 2) = a[5];
    m_a1a2(2, 1) = a[5];

    return {detail::assemble(detail::cavity_pair_space(), std::move(m_c1c2),
                             "dissipative_swap_reduced"),
            detail::assemble(detail::atom_pair_space(), std::move(m_a1a2),
                             "dissipative_swap_reduced")};
}

// ---------------------------------------------------------------------------
// Curve rows
// ---------------------------------------------------------------------------

enum class Method { analytic, numeric };

inline std::string to_string(Method m) {
    return m == Method::analytic ? "analytic" : "numeric";
}

// One sweep point of a scenario curve.
struct ScenarioRow {
    std::string scenario;
    double gt = 0.0;
    double kappa1_over_g = 0.0;
    double kappa2_over_g = 0.0;
    std::string quantity;
    double value = 0.0;
    Method method = Method::analytic;
};

// Atom-cavity concurrence against cavity loss at fixed Rabi angles, with
// kappa_1 = kappa_2 = kappa. Rows are ordered kappa-major, then by angle.
inline std::vector<ScenarioRow> fig5_curve(std::span<const double> gt_values,
                                           std::span<const double> kappa_over_g,
                                           AlphaMode mode = AlphaMode::verbatim) {
    if (gt_values.empty() || kappa_over_g.empty()) {
        throw ArgumentError("fig5_curve: empty grid");
    }
    for (std::size_t k = 0; k < kappa_over_g.size(); ++k) {
        if (kappa_over_g[k] <= 0.0 || (k > 0 && kappa_over_g[k] <= kappa_over_g[k - 1])) {
            throw ArgumentError("fig5_curve: kappa grid must be positive and ascending");
        }
    }
    std::vector<ScenarioRow> rows;
    rows.reserve(gt_values.size() * kappa_over_g.size());
    for (double kappa : kappa_over_g) {
        for (double gt : gt_values) {
            const AlphaSet set = alpha_tripartite(gt, kappa, kappa, mode);
            const double value = concurrence(dissipative_tripartite_reduced(set).c1a1).value;
            rows.push_back({"fig5", gt, kappa, kappa, "C_C1A1", value, Method::analytic});
        }
    }
    return rows;
}

}  // namespace leakycav
