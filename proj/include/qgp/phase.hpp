// phase.hpp — Gauge-continuous spectral tracking of a density-matrix
// trajectory and the purification-based geometric phase functional.

#pragma once

#include "qgp/evolution.hpp"
#include "qgp/linalg.hpp"

#include <array>
#include <functional>
#include <vector>

namespace qgp {

// Time-indexed eigendecomposition with branches matched to their predecessors
// by maximal overlap. Eigenvectors keep the deterministic per-time gauge of
// eig_hermitian2; no continuity re-gauging is applied, since the phase
// functional below is discretized gauge-invariantly.
struct SpectralTrajectory {
    std::vector<double> times;
    std::array<std::vector<double>, 2> p;
    std::array<std::vector<Vector2c>, 2> w;
    std::vector<char> degenerate;
};

struct PhaseResult {
    double phi = 0.0; // principal representative in [0, 2pi)
    std::array<Complex, 2> branch_factors{}; // zero for dropped branches
    double magnitude = 0.0; // |sum of branch factors|, visibility diagnostic
};

enum class PhaseWindow { zero_to_2pi, minus_pi_to_pi };

// Weight below which an initial eigenvalue branch is dropped from the phase.
inline constexpr double kBranchWeightTol = 1e-12;

// Throws BranchAmbiguity if the two candidate overlaps differ by < 1e-12 in
// magnitude at a non-degenerate point. Degenerate points (|bloch| < 1e-9) are
// flagged and matched against the last non-degenerate reference instead.
SpectralTrajectory spectral_track(const Trajectory& traj);

// Phi = arg sum_i sqrt(p_i(0) p_i(T)) <w_i(0)|w_i(T)> prod_k tau_ik with the
// per-step parallel-transport factor tau_ik = conj(o_k)/|o_k|,
// o_k = <w_i(t_k)|w_i(t_k+1)>. Branches with p_i(0) < kBranchWeightTol
// contribute nothing. Throws DegeneratePhase if a retained branch passes
// through a flagged degeneracy and VanishingVisibility if |sum| < 1e-9.
PhaseResult geometric_phase(const SpectralTrajectory& st);

// Free-qubit reference pi (1 + cos theta) mod 2pi.
double free_phase(double theta);

// Maps an arbitrary phase into [0, 2pi) or (-pi, pi]; pi maps to pi in both.
double phase_representative(double phi_raw, PhaseWindow window);

// Distance between two phases on the circle, in [0, pi].
double phase_distance(double a, double b);

// Multiplies each eigenvector w_i(t_k) by exp(i chi(i, t_k)). The phase
// functional is invariant under such re-gaugings; used by gauge tests.
SpectralTrajectory apply_branch_phases(const SpectralTrajectory& st,
                                       const std::function<double(int, double)>& chi);

} // namespace qgp
