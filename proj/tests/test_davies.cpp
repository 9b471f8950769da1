#include "qgp/davies.hpp"

#include "qgp/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace qgp;

namespace {

Eigen::Vector4cd vec2(const Matrix2c& m) {
    Eigen::Vector4cd v;
    v << m(0, 0), m(1, 0), m(0, 1), m(1, 1);
    return v;
}

DaviesGenerator make_generator(double mu_x, double mu_z, double temperature,
                               bool lamb = true) {
    QubitParams q;
    q.mu_x = mu_x;
    q.mu_z = mu_z;
    BathParams b;
    b.temperature = temperature;
    return build_generator(q, b, {}, {lamb});
}

Matrix2c gibbs_state(double temperature) {
    const double z = std::exp(-0.5 / temperature) + std::exp(0.5 / temperature);
    Matrix2c rho = Matrix2c::Zero();
    rho(0, 0) = std::exp(-0.5 / temperature) / z;
    rho(1, 1) = std::exp(0.5 / temperature) / z;
    return rho;
}

} // namespace

TEST_CASE("jump operators: structure of the four projections") {
    QubitParams q;
    BathParams b;

    SUBCASE("decoupled") {
        auto jumps = build_jump_operators(q, b);
        for (const auto& j : jumps) CHECK(j.matrix.cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("transverse coupling gives the ladder operators") {
        q.mu_x = 1.0;
        auto jumps = build_jump_operators(q, b);
        Matrix2c sp = Matrix2c::Zero();
        sp(0, 1) = 1.0; // |1><-1|
        Matrix2c sm = Matrix2c::Zero();
        sm(1, 0) = 1.0;
        CHECK((jumps[0].matrix - sp).cwiseAbs().maxCoeff() == 0.0);
        CHECK(jumps[0].bohr_frequency == 1.0);
        CHECK((jumps[1].matrix - sm).cwiseAbs().maxCoeff() == 0.0);
        CHECK(jumps[1].bohr_frequency == -1.0);
        CHECK(jumps[2].matrix.cwiseAbs().maxCoeff() == 0.0);
        CHECK(jumps[3].matrix.cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("dephasing jumps carry zero rate at T = 0") {
        q.mu_z = 1.0;
        auto jumps = build_jump_operators(q, b);
        CHECK(jumps[2].bohr_frequency == 0.0);
        CHECK(jumps[2].rate == 0.0);
        CHECK(jumps[3].rate == 0.0);
        CHECK((jumps[2].matrix - pauli::projector_up()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((jumps[3].matrix + pauli::projector_down()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("rates obey detailed balance with emission on the lowering operator") {
    QubitParams q;
    q.mu_x = 1.0;
    BathParams b;
    b.temperature = 1.0;
    auto jumps = build_jump_operators(q, b);

    const auto& raising = jumps[0];
    const auto& lowering = jumps[1];
    REQUIRE(std::abs(raising.matrix(0, 1)) == 1.0);
    REQUIRE(std::abs(lowering.matrix(1, 0)) == 1.0);

    CHECK(lowering.rate > raising.rate); // relaxation dominates absorption
    CHECK(raising.rate / lowering.rate == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));

    CHECK(lowering.rate == doctest::Approx(correlation_ft(b, 1.0)).epsilon(1e-14));
    CHECK(raising.rate == doctest::Approx(correlation_ft(b, -1.0)).epsilon(1e-14));

    for (const auto& j : jumps) CHECK(j.rate >= 0.0);

    // at T = 0 absorption shuts off entirely
    b.temperature = 0.0;
    jumps = build_jump_operators(q, b);
    CHECK(jumps[0].rate == 0.0);
    CHECK(jumps[1].rate > 0.0);
}

TEST_CASE("Lamb shift structure") {
    QubitParams q;
    BathParams b;

    SUBCASE("decoupled qubit has no shift") {
        CHECK(build_lamb_shift(q, b).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("pure dephasing shift is proportional to the identity") {
        q.mu_z = 0.8;
        b.temperature = 0.7;
        const Matrix2c h = build_lamb_shift(q, b);
        CHECK(std::abs(h(0, 1)) == 0.0);
        CHECK(h(0, 0).real() == doctest::Approx(h(1, 1).real()).epsilon(1e-12));
        CHECK(h(0, 0).imag() == doctest::Approx(0.0));
    }

    SUBCASE("transverse coupling at T = 0 matches the closed form") {
        q.mu_x = 1.0;
        const Matrix2c h = build_lamb_shift(q, b);
        // diag(s(-eps), s(+eps)) for unit mu_x
        CHECK(std::abs(h(0, 0).real() - oracle::s_zero_temperature(1e-2, 1e2, -1.0)) <= 1e-8);
        CHECK(std::abs(h(1, 1).real() - oracle::s_zero_temperature(1e-2, 1e2, 1.0)) <= 1e-8);
        CHECK(std::abs(h(0, 1)) == 0.0);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("apply_generator: stationary anchor states") {
    SUBCASE("free energy eigenstate") {
        const DaviesGenerator g = make_generator(0.0, 0.0, 0.0);
        CHECK(apply_generator(g, pauli::projector_up()).cwiseAbs().maxCoeff() <= 1e-15);
    }
    SUBCASE("ground state at T = 0") {
        const DaviesGenerator g = make_generator(0.4, 0.0, 0.0);
        CHECK(apply_generator(g, pauli::projector_down()).cwiseAbs().maxCoeff() <= 1e-14);
    }
    SUBCASE("Gibbs state at T > 0") {
        const DaviesGenerator g = make_generator(0.3, 0.0, 1.0);
        CHECK(apply_generator(g, gibbs_state(1.0)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("apply_generator output is traceless and Hermitian") {
    oracle::RandomStates rand(211u);
    const DaviesGenerator gens[] = {make_generator(0.3, 0.0, 0.0),
                                    make_generator(0.2, 0.5, 1.3),
                                    make_generator(0.0, 0.7, 0.4)};
    for (const auto& g : gens) {
        for (int i = 0; i < 333; ++i) {
            const Matrix2c rho = rand.density().m;
            const Matrix2c out = apply_generator(g, rho);
            CHECK(std::abs(out.trace()) <= 1e-13);
            CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() <= 1e-13);
        }
    }
}

TEST_CASE("superoperator matches apply_generator") {
    oracle::RandomStates rand(223u);
    const DaviesGenerator g = make_generator(0.3, 0.4, 0.0);
    const Superoperator4 l = to_superoperator(g);
    for (int i = 0; i < 100; ++i) {
        const Matrix2c rho = rand.density().m;
        const Eigen::Vector4cd lhs = l * vec2(rho);
        const Eigen::Vector4cd rhs = vec2(apply_generator(g, rho));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("superoperator of the free qubit has the commutator spectrum") {
    const DaviesGenerator g = make_generator(0.0, 0.0, 0.0);
    const Superoperator4 l = to_superoperator(g);
    Eigen::ComplexEigenSolver<Superoperator4> solver(l);
    std::array<Complex, 4> vals;
    for (int i = 0; i < 4; ++i) vals[i] = solver.eigenvalues()(i);
    std::sort(vals.begin(), vals.end(),
              [](Complex a, Complex b) { return a.imag() < b.imag(); });
    CHECK(std::abs(vals[0] - Complex(0, -1)) <= 1e-12);
    CHECK(std::abs(vals[1]) <= 1e-12);
    CHECK(std::abs(vals[2]) <= 1e-12);
    CHECK(std::abs(vals[3] - Complex(0, 1)) <= 1e-12);

    const DaviesGenerator zero{};
    CHECK(to_superoperator(zero).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("superoperator preserves the trace (left null vector)") {
    const DaviesGenerator g = make_generator(0.3, 0.5, 0.8);
    const Superoperator4 l = to_superoperator(g);
    const Eigen::Vector4cd vec_id = vec2(Matrix2c::Identity());
    CHECK((vec_id.adjoint() * l).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("stationary state") {
    SUBCASE("thermal fixed point matches the Gibbs populations") {
        const DensityMatrix rho = stationary_state(make_generator(0.3, 0.0, 1.0));
        CHECK((rho.m - gibbs_state(1.0)).cwiseAbs().maxCoeff() <= 1e-8);
    }
    SUBCASE("zero temperature relaxes to the ground state") {
        const DensityMatrix rho = stationary_state(make_generator(0.3, 0.0, 0.0));
        CHECK((rho.m - pauli::projector_down()).cwiseAbs().maxCoeff() <= 1e-10);
    }
    SUBCASE("pure dephasing is not ergodic") {
        CHECK_THROWS_AS((void)stationary_state(make_generator(0.0, 0.5, 1.0)),
                        NonUniqueStationaryState);
    }
    SUBCASE("free qubit is not ergodic") {
        CHECK_THROWS_AS((void)stationary_state(make_generator(0.0, 0.0, 0.0)),
                        NonUniqueStationaryState);
    }
}

TEST_CASE("a flipped rate assignment breaks Gibbs stationarity") {
    // swap the emission/absorption rates by hand; the Gibbs state must stop
    // being a fixed point, which is what pins the sign convention
    DaviesGenerator g = make_generator(0.3, 0.0, 1.0);
    std::swap(g.jumps[0].rate, g.jumps[1].rate);
    CHECK(apply_generator(g, gibbs_state(1.0)).cwiseAbs().maxCoeff() > 1e-4);
}

TEST_CASE("qubit parameter validation") {
    QubitParams q;
    q.epsilon = 0.0;
    CHECK_THROWS_AS(validate_qubit(q), std::invalid_argument);
    q = QubitParams{};
    q.mu_x = -0.2;
    CHECK_THROWS_AS(validate_qubit(q), std::invalid_argument);
}
