#include "qgp/bath.hpp"

#include "qgp/errors.hpp"
#include "qgp/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace qgp;

namespace {
const BathParams kDefault{}; // alpha = 1e-2, omega_c = 1e2, T = 0
}

TEST_CASE("spectral density: Ohmic with exponential cutoff") {
    CHECK(spectral_density(kDefault, 0.0) == 0.0);
    // alpha/2 * 100 * e^{-1}
    CHECK(spectral_density(kDefault, 100.0) ==
          doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-14));

    BathParams decoupled = kDefault;
    decoupled.alpha = 0.0;
    CHECK(spectral_density(decoupled, 12.3) == 0.0);

    CHECK_THROWS_AS((void)spectral_density(kDefault, -0.1), std::invalid_argument);
}

TEST_CASE("correlation function: zero temperature") {
    CHECK(correlation_ft(kDefault, -1.0) == 0.0);
    CHECK(correlation_ft(kDefault, 0.0) == 0.0);

    // strict limit formula pi alpha w e^{-w/wc} ...
    const double c1 = correlation_ft(kDefault, 1.0);
    CHECK(c1 == doctest::Approx(kPi * 1e-2 * std::exp(-0.01)).epsilon(1e-14));

    // ... agrees with the finite-temperature expression as T -> 0
    BathParams cold = kDefault;
    cold.temperature = 1e-8;
    CHECK(correlation_ft(cold, 1.0) == doctest::Approx(c1).epsilon(1e-9));
}

TEST_CASE("correlation function: omega -> 0 limit at finite temperature") {
    BathParams warm = kDefault;
    warm.temperature = 0.5;
    const double c0 = correlation_ft(warm, 0.0);
    CHECK(c0 == doctest::Approx(kPi * 1e-2 * 0.5).epsilon(1e-14));

    // extrapolation oracle: average of c(+-1e-6) should approach c(0)
    const double near = 0.5 * (correlation_ft(warm, 1e-6) + correlation_ft(warm, -1e-6));
    CHECK(near == doctest::Approx(c0).epsilon(1e-9));

    // continuity: |c(+-1e-8) - c(0)| < 1e-6 c(0)
    CHECK(std::abs(correlation_ft(warm, 1e-8) - c0) < 1e-6 * c0);
    CHECK(std::abs(correlation_ft(warm, -1e-8) - c0) < 1e-6 * c0);
}

TEST_CASE("correlation function is a nonnegative rate everywhere") {
    oracle::RandomStates rand(101u);
    for (double temperature : {0.0, 0.1, 1.0, 10.0}) {
        BathParams b = kDefault;
        b.temperature = temperature;
        for (int i = 0; i < 250; ++i) {
            const double w = rand.uniform(-1e3, 1e3);
            CHECK(correlation_ft(b, w) >= 0.0);
        }
    }
}

TEST_CASE("KMS relation c(-w) = e^{-w/T} c(w)") {
    oracle::RandomStates rand(103u);
    for (double temperature : {0.1, 1.0, 10.0}) {
        BathParams b = kDefault;
        b.temperature = temperature;
        for (int i = 0; i < 100; ++i) {
            const double w = rand.uniform(0.01, 50.0);
            const double lhs = correlation_ft(b, -w);
            const double rhs = std::exp(-w / temperature) * correlation_ft(b, w);
            if (rhs > 0.0) CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
        }
    }
}

TEST_CASE("kms_ratio diagnostic") {
    BathParams b = kDefault;
    b.temperature = 1.0;
    CHECK(kms_ratio(b, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    // flipping omega inverts the ratio
    CHECK(kms_ratio(b, -1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

    CHECK(kms_ratio(kDefault, 1.0) == 0.0);                          // T = 0, no absorption
    CHECK_THROWS_AS((void)kms_ratio(kDefault, -1.0), std::domain_error); // denominator 0
    CHECK_THROWS_AS((void)kms_ratio(b, 0.0), std::invalid_argument);

    BathParams decoupled = kDefault;
    decoupled.alpha = 0.0;
    CHECK(kms_ratio(decoupled, 1.0) == 0.0);
}

TEST_CASE("hilbert transform: decoupled bath") {
    BathParams b = kDefault;
    b.alpha = 0.0;
    CHECK(hilbert_transform_s(b, 0.0) == 0.0);
    CHECK(hilbert_transform_s(b, 3.0) == 0.0);
}

TEST_CASE("hilbert transform anchors at zero temperature") {
    // s(0) = alpha omega_c / 2 in closed form
    CHECK(std::abs(hilbert_transform_s(kDefault, 0.0) - 0.5 * 1e-2 * 1e2) <= 1e-8);

    // s(+-1) against the exponential-integral closed form
    for (double w : {1.0, -1.0, 2.5, -2.5}) {
        const double expected = oracle::s_zero_temperature(1e-2, 1e2, w);
        CHECK(std::abs(hilbert_transform_s(kDefault, w) - expected) <= 1e-8);
    }
}

TEST_CASE("hilbert transform against the Gauss-Kronrod reference at T > 0") {
    for (double temperature : {0.5, 1.0}) {
        BathParams b = kDefault;
        b.temperature = temperature;
        for (double w : {0.0, 1.0, -1.0}) {
            const double expected = oracle::s_reference(b, w);
            CHECK(std::abs(hilbert_transform_s(b, w) - expected) <= 1e-7);
        }
    }
}

TEST_CASE("hilbert transform: exterior truncation is converged") {
    PVQuadratureConfig cfg;
    cfg.rel_tol = 1e-8;
    PVQuadratureConfig wide = cfg;
    wide.integration_halfwidth = 40.0 * kDefault.omega_c;
    const double base = hilbert_transform_s(kDefault, 0.0, cfg);
    const double widened = hilbert_transform_s(kDefault, 0.0, wide);
    CHECK(std::abs(base - widened) < cfg.rel_tol);
}

TEST_CASE("hilbert transform is linear in alpha") {
    BathParams twice = kDefault;
    twice.alpha = 2e-2;
    BathParams warm = kDefault;
    warm.temperature = 0.7;
    BathParams warm_twice = twice;
    warm_twice.temperature = 0.7;
    for (double w : {0.0, 1.0, -1.0}) {
        CHECK(hilbert_transform_s(twice, w) ==
              doctest::Approx(2.0 * hilbert_transform_s(kDefault, w)).epsilon(1e-9));
        CHECK(hilbert_transform_s(warm_twice, w) ==
              doctest::Approx(2.0 * hilbert_transform_s(warm, w)).epsilon(1e-9));
    }
}

TEST_CASE("hilbert transform reports non-convergence") {
    PVQuadratureConfig starved;
    starved.max_subdivisions = 1;
    CHECK_THROWS_AS((void)hilbert_transform_s(kDefault, 1.0, starved), NonConvergence);
}

TEST_CASE("c(0) override re-enables the zero-frequency rate at T = 0") {
    BathParams b = kDefault;
    b.c0_override_temperature = 0.05;
    CHECK(correlation_ft(b, 0.0) == doctest::Approx(kPi * 1e-2 * 0.05).epsilon(1e-14));
    // only the single point omega = 0 is affected
    CHECK(correlation_ft(b, 1e-6) == correlation_ft(kDefault, 1e-6));
    // inert at T > 0
    b.temperature = 1.0;
    CHECK(correlation_ft(b, 0.0) == doctest::Approx(kPi * 1e-2 * 1.0).epsilon(1e-14));
}

TEST_CASE("bath parameter validation") {
    BathParams b = kDefault;
    b.alpha = -1.0;
    CHECK_THROWS_AS(validate_bath(b), std::invalid_argument);
    b = kDefault;
    b.omega_c = 0.0;
    CHECK_THROWS_AS(validate_bath(b), std::invalid_argument);
    b = kDefault;
    b.temperature = -0.1;
    CHECK_THROWS_AS(validate_bath(b), std::invalid_argument);
}
