// hilbert.hpp - composite Hilbert-space bookkeeping: labelled subsystems,
// mixed-radix basis indexing, kets, density matrices, operator embedding,
// tensor products and partial traces.
//
// Conventions: subsystems listed left to right map to mixed-radix digits
// from most to least significant, so a ket label like |0 1 g> reads in
// listing order. Atom levels are g -> 0, e -> 1; cavity Fock number n
// maps to digit n. Everything is a dense Eigen matrix; the largest space
// handled here is 16-dimensional.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leakycav/errors.hpp"

namespace leakycav {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double hermiticity_tolerance = 1e-12;
inline constexpr double state_positivity_tolerance = 1e-9;
inline constexpr double normalization_tolerance = 1e-12;

enum class SubsystemKind { cavity_mode, two_level_atom };

struct SubsystemLabel {
    std::string name;  // short identifier such as C1, C2, A1, A2
    SubsystemKind kind = SubsystemKind::cavity_mode;
    int dim = 2;       // atoms are exactly 2; cavities are Fock cutoff + 1

    bool operator==(const SubsystemLabel&) const = default;
};

// Ordered list of labelled subsystems. The basis index of the composite
// space is the mixed-radix number whose most significant digit is the
// level of the first subsystem.
class SpaceSpec {
  public:
    explicit SpaceSpec(std::vector<SubsystemLabel> subsystems)
        : subsystems_(std::move(subsystems)) {
        if (subsystems_.empty()) {
            throw ArgumentError("SpaceSpec: at least one subsystem required");
        }
        for (const auto& s : subsystems_) {
            if (s.dim < 2) {
                throw DimensionError("SpaceSpec: subsystem " + s.name + " has dim < 2");
            }
            if (s.kind == SubsystemKind::two_level_atom && s.dim != 2) {
                throw DimensionError("SpaceSpec: atom " + s.name + " must have dim 2");
            }
        }
        for (std::size_t i = 0; i < subsystems_.size(); ++i) {
            for (std::size_t j = i + 1; j < subsystems_.size(); ++j) {
                if (subsystems_[i].name == subsystems_[j].name) {
                    throw ArgumentError("SpaceSpec: duplicate subsystem name " +
                                        subsystems_[i].name);
                }
            }
        }
        strides_.resize(subsystems_.size());
        int stride = 1;
        for (std::size_t k = subsystems_.size(); k-- > 0;) {
            strides_[k] = stride;
            stride *= subsystems_[k].dim;
        }
        total_dim_ = stride;
    }

    int total_dim() const { return total_dim_; }
    std::size_t size() const { return subsystems_.size(); }
    const std::vector<SubsystemLabel>& subsystems() const { return subsystems_; }
    const SubsystemLabel& subsystem(std::size_t i) const { return subsystems_[i]; }

    bool has(std::string_view name) const {
        return std::any_of(subsystems_.begin(), subsystems_.end(),
                           [&](const SubsystemLabel& s) { return s.name == name; });
    }

    // Position of a named subsystem in listing order.
    std::size_t position(std::string_view name) const {
        for (std::size_t i = 0; i < subsystems_.size(); ++i) {
            if (subsystems_[i].name == name) return i;
        }
        throw ArgumentError("SpaceSpec: no subsystem named " + std::string(name));
    }

    // Mixed-radix encode: one level index per subsystem, listing order.
    int encode(std::span<const int> levels) const {
        if (levels.size() != subsystems_.size()) {
            throw ArgumentError("SpaceSpec::encode: expected " +
                                std::to_string(subsystems_.size()) + " level indices, got " +
                                std::to_string(levels.size()));
        }
        int index = 0;
        for (std::size_t k = 0; k < subsystems_.size(); ++k) {
            if (levels[k] < 0 || levels[k] >= subsystems_[k].dim) {
                throw DimensionError("SpaceSpec::encode: level " + std::to_string(levels[k]) +
                                     " out of range for subsystem " + subsystems_[k].name +
                                     " (dim " + std::to_string(subsystems_[k].dim) + ")");
            }
            index += levels[k] * strides_[k];
        }
        return index;
    }

    std::vector<int> decode(int index) const {
        if (index < 0 || index >= total_dim_) {
            throw DimensionError("SpaceSpec::decode: index " + std::to_string(index) +
                                 " out of range for dim " + std::to_string(total_dim_));
        }
        std::vector<int> levels(subsystems_.size());
        for (std::size_t k = 0; k < subsystems_.size(); ++k) {
            levels[k] = index / strides_[k];
            index %= strides_[k];
        }
        return levels;
    }

    bool operator==(const SpaceSpec& other) const { return subsystems_ == other.subsystems_; }

  private:
    std::vector<SubsystemLabel> subsystems_;
    std::vector<int> strides_;
    int total_dim_ = 0;
};

class DensityMatrix;

// Complex state vector over a SpaceSpec. The `normalized` flag records
// whether unit norm was asserted at construction.
class Ket {
  public:
    Ket(SpaceSpec space, Vector amplitudes, bool assert_normalized = true)
        : space_(std::move(space)), amplitudes_(std::move(amplitudes)),
          normalized_(assert_normalized) {
        if (amplitudes_.size() != space_.total_dim()) {
            throw DimensionError("Ket: amplitude vector length " +
                                 std::to_string(amplitudes_.size()) + " does not match space dim " +
                                 std::to_string(space_.total_dim()));
        }
        if (assert_normalized &&
            std::abs(amplitudes_.norm() - 1.0) > normalization_tolerance) {
            throw ArgumentError("Ket: state is not normalized (norm " +
                                std::to_string(amplitudes_.norm()) + ")");
        }
    }

    const SpaceSpec& space() const { return space_; }
    const Vector& amplitudes() const { return amplitudes_; }
    bool normalized() const { return normalized_; }

    DensityMatrix density_matrix() const;

  private:
    SpaceSpec space_;
    Vector amplitudes_;
    bool normalized_;
};

// Complex square matrix acting on a SpaceSpec (Hamiltonians, jump
// operators). Energies are understood in units of hbar*g.
class OperatorMatrix {
  public:
    OperatorMatrix(SpaceSpec space, Matrix elements)
        : space_(std::move(space)), elements_(std::move(elements)) {
        if (elements_.rows() != space_.total_dim() || elements_.cols() != space_.total_dim()) {
            throw DimensionError("OperatorMatrix: matrix must be " +
                                 std::to_string(space_.total_dim()) + "x" +
                                 std::to_string(space_.total_dim()));
        }
    }

    const SpaceSpec& space() const { return space_; }
    const Matrix& elements() const { return elements_; }

  private:
    SpaceSpec space_;
    Matrix elements_;
};

// Validation level for density matrices. `physical` additionally requires
// eigenvalues >= -1e-9; `hermitian_only` admits the trace-deficient and
// mildly non-positive matrices produced by the secular closed forms.
enum class StateChecks { physical, hermitian_only };

class DensityMatrix {
  public:
    DensityMatrix(SpaceSpec space, Matrix elements, StateChecks checks = StateChecks::physical)
        : space_(std::move(space)), elements_(std::move(elements)), checks_(checks) {
        const int d = space_.total_dim();
        if (elements_.rows() != d || elements_.cols() != d) {
            throw DimensionError("DensityMatrix: matrix must be " + std::to_string(d) + "x" +
                                 std::to_string(d));
        }
        const double herm_dev = (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
        if (herm_dev > hermiticity_tolerance) {
            throw ArgumentError("DensityMatrix: not Hermitian (max deviation " +
                                std::to_string(herm_dev) + ")");
        }
        if (std::abs(elements_.trace().imag()) > hermiticity_tolerance) {
            throw ArgumentError("DensityMatrix: trace has imaginary part");
        }
        if (checks_ == StateChecks::physical) {
            const double lowest = min_eigenvalue();
            if (lowest < -state_positivity_tolerance) {
                throw ArgumentError("DensityMatrix: negative eigenvalue " +
                                    std::to_string(lowest));
            }
        }
    }

    const SpaceSpec& space() const { return space_; }
    const Matrix& elements() const { return elements_; }
    StateChecks checks() const { return checks_; }

    double trace() const { return elements_.trace().real(); }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(elements_, Eigen::EigenvaluesOnly);
        return solver.eigenvalues().minCoeff();
    }

  private:
    SpaceSpec space_;
    Matrix elements_;
    StateChecks checks_;
};

inline DensityMatrix Ket::density_matrix() const {
    return DensityMatrix(space_, amplitudes_ * amplitudes_.adjoint());
}

// Computational basis vector for one level index per subsystem.
inline Ket basis_ket(const SpaceSpec& space, std::span<const int> occupation) {
    const int index = space.encode(occupation);
    Vector v = Vector::Zero(space.total_dim());
    v(index) = 1.0;
    return Ket(space, std::move(v));
}

inline Ket basis_ket(const SpaceSpec& space, std::initializer_list<int> occupation) {
    return basis_ket(space, std::span<const int>(occupation.begin(), occupation.size()));
}

namespace detail {

inline SpaceSpec concat_spaces(const SpaceSpec& a, const SpaceSpec& b) {
    for (const auto& s : b.subsystems()) {
        if (a.has(s.name)) {
            throw CompositionError("tensor: duplicate subsystem label " + s.name);
        }
    }
    std::vector<SubsystemLabel> combined = a.subsystems();
    combined.insert(combined.end(), b.subsystems().begin(), b.subsystems().end());
    return SpaceSpec(std::move(combined));
}

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace detail

inline Ket tensor(const Ket& a, const Ket& b) {
    SpaceSpec space = detail::concat_spaces(a.space(), b.space());
    Vector v(a.amplitudes().size() * b.amplitudes().size());
    for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
        v.segment(i * b.amplitudes().size(), b.amplitudes().size()) =
            a.amplitudes()(i) * b.amplitudes();
    }
    return Ket(std::move(space), std::move(v), a.normalized() && b.normalized());
}

inline OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b) {
    SpaceSpec space = detail::concat_spaces(a.space(), b.space());
    return OperatorMatrix(std::move(space), detail::kronecker(a.elements(), b.elements()));
}

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    SpaceSpec space = detail::concat_spaces(a.space(), b.space());
    const StateChecks checks = (a.checks() == StateChecks::physical &&
                                b.checks() == StateChecks::physical)
                                   ? StateChecks::physical
                                   : StateChecks::hermitian_only;
    return DensityMatrix(std::move(space), detail::kronecker(a.elements(), b.elements()), checks);
}

inline OperatorMatrix identity_operator(const SpaceSpec& space) {
    return OperatorMatrix(space, Matrix::Identity(space.total_dim(), space.total_dim()));
}

// Single-subsystem operators, built on a one-subsystem space carrying the
// given label so they can be embedded into composite spaces.

inline OperatorMatrix annihilation_operator(const SubsystemLabel& mode) {
    if (mode.kind != SubsystemKind::cavity_mode) {
        throw ArgumentError("annihilation_operator: " + mode.name + " is not a cavity mode");
    }
    Matrix a = Matrix::Zero(mode.dim, mode.dim);
    for (int n = 1; n < mode.dim; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return OperatorMatrix(SpaceSpec({mode}), std::move(a));
}

inline OperatorMatrix creation_operator(const SubsystemLabel& mode) {
    const OperatorMatrix a = annihilation_operator(mode);
    return OperatorMatrix(a.space(), a.elements().adjoint());
}

// sigma_plus |g> = |e>
inline OperatorMatrix sigma_plus(const SubsystemLabel& atom) {
    if (atom.kind != SubsystemKind::two_level_atom) {
        throw ArgumentError("sigma_plus: " + atom.name + " is not a two-level atom");
    }
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return OperatorMatrix(SpaceSpec({atom}), std::move(m));
}

inline OperatorMatrix sigma_minus(const SubsystemLabel& atom) {
    const OperatorMatrix p = sigma_plus(atom);
    return OperatorMatrix(p.space(), p.elements().adjoint());
}

// Lift a single-subsystem operator to `space`, acting as the identity on
// every other factor.
inline OperatorMatrix embed(const OperatorMatrix& op, const SpaceSpec& space,
                            std::string_view target) {
    if (op.space().size() != 1) {
        throw CompositionError("embed: operator must act on a single subsystem");
    }
    if (!space.has(target)) {
        throw CompositionError("embed: no subsystem named " + std::string(target) +
                               " in target space");
    }
    const std::size_t pos = space.position(target);
    const int target_dim = space.subsystem(pos).dim;
    if (op.elements().rows() != target_dim) {
        throw DimensionError("embed: operator dim " + std::to_string(op.elements().rows()) +
                             " does not match subsystem " + std::string(target) + " dim " +
                             std::to_string(target_dim));
    }
    int pre = 1, post = 1;
    for (std::size_t k = 0; k < space.size(); ++k) {
        if (k < pos) pre *= space.subsystem(k).dim;
        if (k > pos) post *= space.subsystem(k).dim;
    }
    Matrix lifted = detail::kronecker(
        detail::kronecker(Matrix::Identity(pre, pre), op.elements()),
        Matrix::Identity(post, post));
    return OperatorMatrix(space, std::move(lifted));
}

// Trace out every subsystem not named in `keep`; kept subsystems retain
// their relative order.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<std::string>& keep) {
    if (keep.empty()) {
        throw ArgumentError("partial_trace: keep set must be nonempty");
    }
    const SpaceSpec& space = rho.space();
    std::vector<bool> kept(space.size(), false);
    for (const auto& name : keep) {
        const std::size_t pos = space.position(name);  // throws on unknown label
        if (kept[pos]) {
            throw ArgumentError("partial_trace: duplicate label " + name);
        }
        kept[pos] = true;
    }

    std::vector<SubsystemLabel> kept_labels;
    std::vector<std::size_t> kept_positions;
    for (std::size_t k = 0; k < space.size(); ++k) {
        if (kept[k]) {
            kept_labels.push_back(space.subsystem(k));
            kept_positions.push_back(k);
        }
    }
    SpaceSpec out_space(kept_labels);

    const int d = space.total_dim();
    Matrix out = Matrix::Zero(out_space.total_dim(), out_space.total_dim());

    // Cache digit tuples once; the full space is at most 16-dimensional.
    std::vector<std::vector<int>> digits(d);
    for (int i = 0; i < d; ++i) digits[i] = space.decode(i);

    std::vector<int> ki(kept_positions.size()), kj(kept_positions.size());
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            bool diagonal_in_traced = true;
            for (std::size_t k = 0; k < space.size(); ++k) {
                if (!kept[k] && digits[i][k] != digits[j][k]) {
                    diagonal_in_traced = false;
                    break;
                }
            }
            if (!diagonal_in_traced) continue;
            for (std::size_t m = 0; m < kept_positions.size(); ++m) {
                ki[m] = digits[i][kept_positions[m]];
                kj[m] = digits[j][kept_positions[m]];
            }
            out(out_space.encode(ki), out_space.encode(kj)) += rho.elements()(i, j);
        }
    }
    return DensityMatrix(std::move(out_space), std::move(out), rho.checks());
}

}  // namespace leakycav
