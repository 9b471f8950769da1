// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace qgp {

// Adaptive quadrature ran out of its subdivision budget.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A propagated state developed a negative eigenvalue beyond tolerance.
struct PositivityViolation : std::runtime_error {
    explicit PositivityViolation(const std::string& what) : std::runtime_error(what) {}
};

// Hermiticity/trace drift of the integrator exceeded the allowed correction.
struct IntegratorDrift : std::runtime_error {
    explicit IntegratorDrift(const std::string& what) : std::runtime_error(what) {}
};

// Eigenvector branch matching could not decide between the two candidates.
struct BranchAmbiguity : std::runtime_error {
    explicit BranchAmbiguity(const std::string& what) : std::runtime_error(what) {}
};

// A retained eigenvalue branch passed through a spectral degeneracy.
struct DegeneratePhase : std::runtime_error {
    explicit DegeneratePhase(const std::string& what) : std::runtime_error(what) {}
};

// The phase functional summed to (numerically) zero, arg is undefined.
struct VanishingVisibility : std::runtime_error {
    explicit VanishingVisibility(const std::string& what) : std::runtime_error(what) {}
};

// The generator's null space has dimension > 1.
struct NonUniqueStationaryState : std::runtime_error {
    explicit NonUniqueStationaryState(const std::string& what) : std::runtime_error(what) {}
};

// Config file parse or semantic error; message carries line/key context.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qgp
