#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "leakycav/hilbert.hpp"
#include "leakycav/scenarios.hpp"
#include "test_support.hpp"

using namespace leakycav;

namespace {

SpaceSpec cavity_pair() {
    return SpaceSpec({{"C1", SubsystemKind::cavity_mode, 2},
                      {"C2", SubsystemKind::cavity_mode, 2}});
}

}  // namespace

TEST_CASE("basis_ket places the amplitude at the mixed-radix index") {
    const SpaceSpec cc = cavity_pair();
    const Ket k01 = basis_ket(cc, {0, 1});
    REQUIRE(k01.amplitudes()(1) == Complex(1.0, 0.0));
    REQUIRE(k01.amplitudes().cwiseAbs().sum() == 1.0);

    const SpaceSpec tri = tripartite_space();
    const Ket k10g = basis_ket(tri, {1, 0, 0});
    REQUIRE(k10g.amplitudes()(4) == Complex(1.0, 0.0));
}

TEST_CASE("basis_ket rejects out-of-range levels and names the subsystem") {
    const SpaceSpec cc = cavity_pair();
    REQUIRE_THROWS_AS(basis_ket(cc, {2, 0}), DimensionError);
    REQUIRE_THROWS_WITH(basis_ket(cc, {2, 0}), Catch::Matchers::ContainsSubstring("C1"));
}

TEST_CASE("space construction enforces label and dimension invariants") {
    REQUIRE_THROWS_AS(SpaceSpec({{"C1", SubsystemKind::cavity_mode, 1}}), DimensionError);
    REQUIRE_THROWS_AS(SpaceSpec({{"A1", SubsystemKind::two_level_atom, 3}}), DimensionError);
    REQUIRE_THROWS_AS(SpaceSpec({{"C1", SubsystemKind::cavity_mode, 2},
                                 {"C1", SubsystemKind::cavity_mode, 2}}),
                      ArgumentError);
}

TEST_CASE("mixed-radix encode/decode is a bijection") {
    const SpaceSpec space({{"C1", SubsystemKind::cavity_mode, 2},
                           {"C2", SubsystemKind::cavity_mode, 3},
                           {"A1", SubsystemKind::two_level_atom, 2}});
    REQUIRE(space.total_dim() == 12);
    for (int i = 0; i < space.total_dim(); ++i) {
        REQUIRE(space.encode(space.decode(i)) == i);
    }
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 2; ++c) {
                const std::array<int, 3> digits{a, b, c};
                REQUIRE(space.decode(space.encode(digits)) ==
                        std::vector<int>({a, b, c}));
            }
}

TEST_CASE("tensor of kets concatenates spaces and multiplies amplitudes") {
    const SpaceSpec c1({{"C1", SubsystemKind::cavity_mode, 2}});
    const SpaceSpec c2({{"C2", SubsystemKind::cavity_mode, 2}});
    const Ket product = tensor(basis_ket(c1, {0}), basis_ket(c2, {1}));
    REQUIRE(product.space().total_dim() == 4);
    REQUIRE(product.amplitudes()(1) == Complex(1.0, 0.0));

    // Entangled cavity pair joined with a ground-state atom.
    Vector bell(4);
    bell << 0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0;
    const Ket pair(cavity_pair(), bell);
    const SpaceSpec a1({{"A1", SubsystemKind::two_level_atom, 2}});
    const Ket joint = tensor(pair, basis_ket(a1, {0}));
    REQUIRE(joint.space().total_dim() == 8);
    REQUIRE(std::abs(joint.amplitudes()(2) - 1.0 / std::sqrt(2.0)) < 1e-15);
    REQUIRE(std::abs(joint.amplitudes()(4) - 1.0 / std::sqrt(2.0)) < 1e-15);
    REQUIRE(joint.amplitudes().cwiseAbs2().sum() == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("tensor of operators is the Kronecker product") {
    const SpaceSpec c1({{"C1", SubsystemKind::cavity_mode, 2}});
    const SpaceSpec c2({{"C2", SubsystemKind::cavity_mode, 2}});
    const OperatorMatrix id4 = tensor(identity_operator(c1), identity_operator(c2));
    REQUIRE(id4.elements().isApprox(Matrix::Identity(4, 4)));
}

TEST_CASE("tensor rejects duplicate labels") {
    const SpaceSpec c1({{"C1", SubsystemKind::cavity_mode, 2}});
    REQUIRE_THROWS_AS(tensor(basis_ket(c1, {0}), basis_ket(c1, {0})), CompositionError);
}

TEST_CASE("embed lifts a single-subsystem operator in basis order") {
    const SpaceSpec pair({{"C1", SubsystemKind::cavity_mode, 2},
                          {"A1", SubsystemKind::two_level_atom, 2}});
    const SubsystemLabel atom = pair.subsystem(1);
    const Matrix lifted = embed(sigma_minus(atom), pair, "A1").elements();
    const Matrix expected =
        detail::kronecker(Matrix::Identity(2, 2), sigma_minus(atom).elements());
    REQUIRE(lifted.isApprox(expected));

    const SpaceSpec cc = cavity_pair();
    const Matrix a1 = embed(annihilation_operator(cc.subsystem(0)), cc, "C1").elements();
    const Vector v10 = basis_ket(cc, {1, 0}).amplitudes();
    const Vector v00 = basis_ket(cc, {0, 0}).amplitudes();
    REQUIRE((a1 * v10 - v00).cwiseAbs().maxCoeff() < 1e-15);

    const SpaceSpec tri = tripartite_space();
    REQUIRE(embed(annihilation_operator(tri.subsystem(1)), tri, "C2").elements().rows() == 8);

    REQUIRE_THROWS_AS(embed(sigma_minus(atom), cc, "A9"), CompositionError);
}

TEST_CASE("partial trace of a product state recovers the factor") {
    support::Rng rng(11);
    const SpaceSpec qa({{"Qa", SubsystemKind::two_level_atom, 2}});
    const SpaceSpec qb({{"Qb", SubsystemKind::two_level_atom, 2}});
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho_a(qa, rng.density(2));
        const DensityMatrix rho_b(qb, rng.density(2));
        const DensityMatrix joint = tensor(rho_a, rho_b);
        const DensityMatrix back = partial_trace(joint, {"Qa"});
        REQUIRE((back.elements() - rho_a.elements()).cwiseAbs().maxCoeff() < 1e-12);
        REQUIRE(std::abs(back.trace() - joint.trace()) < 1e-12);
    }
}

TEST_CASE("partial trace reproduces the reduced cavity pair at gt=0") {
    const DensityMatrix rho = ideal_tripartite_state(0.0).density_matrix();
    const DensityMatrix cavities = partial_trace(rho, {"C1", "C2"});
    Matrix expected = Matrix::Zero(4, 4);
    expected(1, 1) = expected(2, 2) = expected(1, 2) = expected(2, 1) = 0.5;
    REQUIRE((cavities.elements() - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace puts half the population on |0,e> at gt=pi/2") {
    const DensityMatrix rho = ideal_tripartite_state(M_PI / 2).density_matrix();
    const DensityMatrix c1a1 = partial_trace(rho, {"C1", "A1"});
    REQUIRE(c1a1.elements()(1, 1).real() == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("partial trace rejects empty or unknown keep sets") {
    const DensityMatrix rho = ideal_tripartite_state(0.3).density_matrix();
    REQUIRE_THROWS_AS(partial_trace(rho, {}), ArgumentError);
    REQUIRE_THROWS_AS(partial_trace(rho, {"C9"}), ArgumentError);
    REQUIRE_THROWS_AS(partial_trace(rho, {"C1", "C1"}), ArgumentError);
}

TEST_CASE("partial trace is linear") {
    support::Rng rng(12);
    const SpaceSpec tri = tripartite_space();
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix m1 = rng.density(8);
        const Matrix m2 = rng.density(8);
        const double a = rng.uniform(0.0, 1.0);
        const Matrix mix = a * m1 + (1.0 - a) * m2;
        const Matrix lhs = partial_trace(DensityMatrix(tri, mix), {"C2", "A1"}).elements();
        const Matrix rhs =
            a * partial_trace(DensityMatrix(tri, m1), {"C2", "A1"}).elements() +
            (1.0 - a) * partial_trace(DensityMatrix(tri, m2), {"C2", "A1"}).elements();
        REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("partial trace preserves Hermiticity and positivity") {
    support::Rng rng(13);
    const SpaceSpec tri = tripartite_space();
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix reduced =
            partial_trace(DensityMatrix(tri, rng.density(8)), {"C1", "A1"});
        const Matrix& m = reduced.elements();
        REQUIRE((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        REQUIRE(reduced.min_eigenvalue() > -1e-9);
    }
}

TEST_CASE("kets validate norm only when normalization is asserted") {
    const SpaceSpec c1({{"C1", SubsystemKind::cavity_mode, 2}});
    Vector v(2);
    v << 0.5, 0.0;
    REQUIRE_THROWS_AS(Ket(c1, v), ArgumentError);
    const Ket raw(c1, v, false);
    REQUIRE_FALSE(raw.normalized());
}

TEST_CASE("density matrices reject non-Hermitian and non-positive input") {
    const SpaceSpec c1({{"C1", SubsystemKind::cavity_mode, 2}});
    Matrix bad(2, 2);
    bad << 1.0, Complex(0.0, 0.5), Complex(0.0, 0.5), 0.0;
    REQUIRE_THROWS_AS(DensityMatrix(c1, bad), ArgumentError);

    Matrix indefinite(2, 2);
    indefinite << 1.0, 2.0, 2.0, 1.0;  // eigenvalues 3 and -1
    REQUIRE_THROWS_AS(DensityMatrix(c1, indefinite), ArgumentError);
    REQUIRE_NOTHROW(DensityMatrix(c1, indefinite, StateChecks::hermitian_only));
}
