#include "qgp/phase.hpp"

#include "qgp/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgp {

namespace {

constexpr double kAmbiguityTol = 1e-12;

} // namespace

SpectralTrajectory spectral_track(const Trajectory& traj) {
    const std::size_t n = traj.states.size();
    if (n < 2) throw std::invalid_argument("spectral_track: need at least 2 trajectory points");

    SpectralTrajectory st;
    st.times = traj.times;
    for (int i = 0; i < 2; ++i) {
        st.p[i].reserve(n);
        st.w[i].reserve(n);
    }
    st.degenerate.reserve(n);

    // Reference pair for branch matching: the last non-degenerate assignment.
    std::array<Vector2c, 2> ref;
    bool have_ref = false;

    for (std::size_t k = 0; k < n; ++k) {
        Spectral2 s = eig_hermitian2(traj.states[k]);
        st.degenerate.push_back(s.degenerate ? 1 : 0);

        bool swap = false;
        if (have_ref) {
            const double keep = std::abs(overlap(ref[0], s.w[0]));
            const double cross = std::abs(overlap(ref[0], s.w[1]));
            if (!s.degenerate && std::abs(keep - cross) < kAmbiguityTol) {
                std::ostringstream os;
                os << "branch matching ambiguous at t = " << traj.times[k]
                   << ": |overlaps| differ by " << std::abs(keep - cross);
                throw BranchAmbiguity(os.str());
            }
            swap = cross > keep;
        }

        const int first = swap ? 1 : 0;
        const int second = swap ? 0 : 1;
        st.p[0].push_back(s.p[first]);
        st.p[1].push_back(s.p[second]);
        st.w[0].push_back(s.w[first]);
        st.w[1].push_back(s.w[second]);

        if (!s.degenerate) {
            ref = {st.w[0].back(), st.w[1].back()};
            have_ref = true;
        }
    }
    return st;
}

PhaseResult geometric_phase(const SpectralTrajectory& st) {
    const std::size_t n = st.times.size();
    if (n < 2) throw std::invalid_argument("geometric_phase: need at least 2 points");

    PhaseResult result;
    Complex sum(0.0, 0.0);

    for (int i = 0; i < 2; ++i) {
        const double weight = std::sqrt(st.p[i].front() * st.p[i].back());
        if (st.p[i].front() < kBranchWeightTol) {
            result.branch_factors[i] = Complex(0.0, 0.0);
            continue;
        }

        for (std::size_t k = 0; k < n; ++k) {
            if (st.degenerate[k]) {
                std::ostringstream os;
                os << "retained branch " << i << " passes a spectral degeneracy at t = "
                   << st.times[k];
                throw DegeneratePhase(os.str());
            }
        }

        Complex transport(1.0, 0.0);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const Complex o = overlap(st.w[i][k], st.w[i][k + 1]);
            const double mag = std::abs(o);
            if (mag < kAmbiguityTol) {
                std::ostringstream os;
                os << "consecutive eigenvectors of branch " << i
                   << " are orthogonal at t = " << st.times[k];
                throw DegeneratePhase(os.str());
            }
            transport *= std::conj(o) / mag;
        }
        result.branch_factors[i] =
            weight * overlap(st.w[i].front(), st.w[i].back()) * transport;
        sum += result.branch_factors[i];
    }

    result.magnitude = std::abs(sum);
    if (result.magnitude < 1e-9) {
        throw VanishingVisibility("phase functional magnitude below 1e-9, arg undefined");
    }
    result.phi = phase_representative(std::arg(sum), PhaseWindow::zero_to_2pi);
    return result;
}

double free_phase(double theta) {
    return phase_representative(kPi * (1.0 + std::cos(theta)), PhaseWindow::zero_to_2pi);
}

double phase_representative(double phi_raw, PhaseWindow window) {
    if (window == PhaseWindow::zero_to_2pi) {
        double r = std::fmod(phi_raw, 2.0 * kPi);
        if (r < 0.0) r += 2.0 * kPi;
        if (r == 2.0 * kPi) r = 0.0; // fmod rounding at the boundary
        return r;
    }
    double r = std::remainder(phi_raw, 2.0 * kPi); // lands in [-pi, pi]
    if (r == -kPi) r = kPi;
    return r;
}

double phase_distance(double a, double b) {
    return std::abs(std::remainder(a - b, 2.0 * kPi));
}

SpectralTrajectory apply_branch_phases(const SpectralTrajectory& st,
                                       const std::function<double(int, double)>& chi) {
    SpectralTrajectory out = st;
    for (int i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < st.times.size(); ++k) {
            const double angle = chi(i, st.times[k]);
            out.w[i][k] = st.w[i][k] * Complex(std::cos(angle), std::sin(angle));
        }
    }
    return out;
}

} // namespace qgp
