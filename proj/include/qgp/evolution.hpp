// evolution.hpp — Fixed-step propagation of the density matrix under the
// Davies generator, plus the superoperator-exponential reference path.

#pragma once

#include "qgp/davies.hpp"
#include "qgp/linalg.hpp"

#include <vector>

namespace qgp {

enum class IntegrationMethod { rk4, exact_expm };

struct IntegratorConfig {
    IntegrationMethod method = IntegrationMethod::rk4;
    int steps_per_period = 2000;
    double periods = 1.0; // duration in units of the free period 2*pi
};

void validate_integrator(const IntegratorConfig& cfg);

// Uniformly sampled states from t = 0 to t = periods * 2*pi, one per
// integration step, with drift monitors accumulated along the way.
struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;

    // Largest per-step corrections applied when re-Hermitizing and
    // re-normalizing the recorded states, and the worst eigenvalue seen.
    double max_hermiticity_correction = 0.0;
    double max_trace_correction = 0.0;
    double min_eigenvalue = 1.0;
};

// rho(0) = |theta><theta| with |theta> = cos(theta/2)|1> + sin(theta/2)|-1>;
// rejects theta outside [0, pi].
DensityMatrix initial_state(double theta);

// Classic fixed-step 4th-order integration of apply_generator; every recorded
// state is re-Hermitized and trace-renormalized with the applied corrections
// logged (IntegratorDrift beyond 1e-9). Throws PositivityViolation when the
// smallest eigenvalue drops below -1e-8. method == exact_expm instead steps
// with the one-step superoperator exponential.
Trajectory evolve(const DensityMatrix& rho0, const DaviesGenerator& g,
                  const IntegratorConfig& cfg);

// vec(rho(t)) = exp(t L) vec(rho0) via scaling-and-squaring on the 4x4
// superoperator; usable at arbitrary t.
DensityMatrix evolve_exact(const DensityMatrix& rho0, const DaviesGenerator& g, double t);

} // namespace qgp
