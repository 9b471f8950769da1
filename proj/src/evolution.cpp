#include "qgp/evolution.hpp"

#include "qgp/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgp {

namespace {

constexpr double kDriftTol = 1e-9;
constexpr double kNegativityTol = 1e-8;

Eigen::Vector4cd vec2(const Matrix2c& m) {
    Eigen::Vector4cd v;
    v << m(0, 0), m(1, 0), m(0, 1), m(1, 1);
    return v;
}

Matrix2c unvec2(const Eigen::Vector4cd& v) {
    Matrix2c m;
    m << v(0), v(2), v(1), v(3);
    return m;
}

double min_eigenvalue2(const Matrix2c& m) {
    const double tr = m.trace().real();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    return 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
}

// Re-Hermitize and renormalize, recording the applied corrections.
Matrix2c condition_state(const Matrix2c& raw, double t, Trajectory& traj) {
    const double herm = 0.5 * (raw - raw.adjoint()).cwiseAbs().maxCoeff();
    Matrix2c m = 0.5 * (raw + raw.adjoint().eval());
    const double tr = m.trace().real();
    const double trace_dev = std::abs(tr - 1.0);
    if (herm > kDriftTol || trace_dev > kDriftTol) {
        std::ostringstream os;
        os << "integrator drift at t = " << t << ": hermiticity " << herm
           << ", trace " << trace_dev << " (allowed " << kDriftTol << ")";
        throw IntegratorDrift(os.str());
    }
    traj.max_hermiticity_correction = std::max(traj.max_hermiticity_correction, herm);
    traj.max_trace_correction = std::max(traj.max_trace_correction, trace_dev);
    m /= tr;

    const double min_eig = min_eigenvalue2(m);
    traj.min_eigenvalue = std::min(traj.min_eigenvalue, min_eig);
    if (min_eig < -kNegativityTol) {
        std::ostringstream os;
        os << "state positivity violated at t = " << t << ": min eigenvalue " << min_eig;
        throw PositivityViolation(os.str());
    }
    return m;
}

} // namespace

void validate_integrator(const IntegratorConfig& cfg) {
    if (cfg.steps_per_period < 100)
        throw std::invalid_argument("integrator: steps_per_period must be >= 100");
    if (!(cfg.periods > 0.0))
        throw std::invalid_argument("integrator: periods must be > 0");
}

DensityMatrix initial_state(double theta) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        std::ostringstream os;
        os << "initial polar angle must lie in [0, pi], got " << theta;
        throw std::invalid_argument(os.str());
    }
    const Vector2c psi(std::cos(0.5 * theta), std::sin(0.5 * theta));
    return DensityMatrix{psi * psi.adjoint()};
}

Trajectory evolve(const DensityMatrix& rho0, const DaviesGenerator& g,
                  const IntegratorConfig& cfg) {
    validate_integrator(cfg);
    validate_density(rho0.m);

    const long steps = std::lround(std::ceil(cfg.steps_per_period * cfg.periods - 1e-9));
    const double t_final = cfg.periods * kFreePeriod;
    const double dt = t_final / static_cast<double>(steps);

    Trajectory traj;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(rho0);
    traj.min_eigenvalue = min_eigenvalue2(rho0.m);

    Matrix2c rho = rho0.m;

    if (cfg.method == IntegrationMethod::exact_expm) {
        const Superoperator4 step = (dt * to_superoperator(g)).exp();
        Eigen::Vector4cd v = vec2(rho);
        for (long k = 1; k <= steps; ++k) {
            v = step * v;
            const double t = dt * static_cast<double>(k);
            const Matrix2c m = condition_state(unvec2(v), t, traj);
            v = vec2(m);
            traj.times.push_back(t);
            traj.states.push_back(DensityMatrix{m});
        }
        return traj;
    }

    for (long k = 1; k <= steps; ++k) {
        const Matrix2c k1 = apply_generator(g, rho);
        const Matrix2c k2 = apply_generator(g, rho + (0.5 * dt) * k1);
        const Matrix2c k3 = apply_generator(g, rho + (0.5 * dt) * k2);
        const Matrix2c k4 = apply_generator(g, rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double t = dt * static_cast<double>(k);
        rho = condition_state(rho, t, traj);
        traj.times.push_back(t);
        traj.states.push_back(DensityMatrix{rho});
    }
    return traj;
}

DensityMatrix evolve_exact(const DensityMatrix& rho0, const DaviesGenerator& g, double t) {
    validate_density(rho0.m);
    const Superoperator4 propagator = (t * to_superoperator(g)).exp();
    Matrix2c m = unvec2(propagator * vec2(rho0.m));
    m = Matrix2c(0.5 * (m + m.adjoint().eval()));
    m /= m.trace().real();
    validate_density(m, 1e-9, 1e-9, 1e-8);
    return DensityMatrix{m};
}

} // namespace qgp
