// davies.hpp — Weak-coupling generator for the qubit: jump operators at the
// Bohr frequencies with thermal rates, Lamb shift, action on density matrices,
// and the explicit 4x4 superoperator for exact-exponential cross-checks.

#pragma once

#include "qgp/bath.hpp"
#include "qgp/linalg.hpp"

#include <array>

namespace qgp {

// H_Q = (epsilon/2) sigma_z, H_I = mu_x sigma_x + mu_z sigma_z (hbar = 1).
struct QubitParams {
    double epsilon = 1.0;
    double mu_x = 0.0;
    double mu_z = 0.0;
};

void validate_qubit(const QubitParams& q);

// One projected piece P_k H_I P_l of the coupling operator.
//
// bohr_frequency carries the (lambda_k - lambda_l) label of the projection, so
// the raising operator is labelled +epsilon. The rate is the bath weight of the
// transition the operator actually drives: the lowering operator relaxes the
// qubit and emits the quantum into the bath, so it carries c(+epsilon), the
// raising operator c(-epsilon). Detailed balance then makes the Gibbs state
// stationary, which pins this pairing uniquely (see stationary_state tests).
struct JumpOperator {
    Matrix2c matrix = Matrix2c::Zero();
    double bohr_frequency = 0.0;
    double rate = 0.0;
};

struct DaviesGenerator {
    Matrix2c effective_hamiltonian = Matrix2c::Zero(); // H_Q + Lamb shift
    std::array<JumpOperator, 4> jumps{};
};

struct GeneratorOptions {
    bool include_lamb_shift = true;
};

// Superoperator acting on column-major vec(rho).
using Superoperator4 = Eigen::Matrix4cd;

// The four projections of H_I, ordered raising, lowering, diagonal-up,
// diagonal-down. Operators with vanishing coupling are kept as zero matrices.
std::array<JumpOperator, 4> build_jump_operators(const QubitParams& q, const BathParams& b);

// H_LS = sum s(Omega_kl) A_kl^dag A_kl
//      = s(+eps) mu_x^2 P_down + s(-eps) mu_x^2 P_up + s(0) mu_z^2 I.
// Diagonal in the energy basis; the mu_z piece is a multiple of the identity.
Matrix2c build_lamb_shift(const QubitParams& q, const BathParams& b,
                          const PVQuadratureConfig& cfg = {});

DaviesGenerator build_generator(const QubitParams& q, const BathParams& b,
                                const PVQuadratureConfig& cfg = {},
                                const GeneratorOptions& opts = {});

// -i[H_eff, rho] + sum_kl rate (A rho A^dag - (1/2){A^dag A, rho}).
// Hermitian and traceless for Hermitian input.
Matrix2c apply_generator(const DaviesGenerator& g, const Matrix2c& rho);

// Matrix L with vec(apply_generator(g, rho)) = L vec(rho), column-major vec.
Superoperator4 to_superoperator(const DaviesGenerator& g);

// Unit-trace Hermitian null vector of the superoperator. Throws
// NonUniqueStationaryState when the null space has dimension > 1
// (e.g. mu_x = 0, where every energy-diagonal state is stationary).
DensityMatrix stationary_state(const DaviesGenerator& g);

} // namespace qgp
