// bath.hpp — Ohmic spectral density, the bath correlation Fourier transform
// c(omega), and its principal-value Hilbert transform s(omega).

#pragma once

#include "qgp/quadrature.hpp"

namespace qgp {

// Ohmic bath: D(w) = (alpha/2) w exp(-w/omega_c). Units: omega_c in epsilon/hbar,
// temperature in epsilon/k_B.
struct BathParams {
    double alpha = 1e-2;
    double omega_c = 1e2;
    double temperature = 0.0;

    // Effective temperature substituted into c(0) when temperature == 0.
    // The strict omega -> 0 limit of c at T = 0 is zero, which makes the pure
    // dephasing channel inert; setting this > 0 re-enables it with the finite
    // temperature rate pi*alpha*T_eff. Zero means the strict limit.
    double c0_override_temperature = 0.0;
};

void validate_bath(const BathParams& b);

// Quadrature controls for s(omega). integration_halfwidth <= 0 means
// "20 * omega_c", which bounds the truncation error by ~exp(-20) relative
// thanks to the exponential cutoff in c.
struct PVQuadratureConfig {
    double integration_halfwidth = 0.0;
    double interior_halfwidth = 1.0;
    double rel_tol = 1e-10;
    long max_subdivisions = 200000;

    double resolved_halfwidth(double omega_c) const {
        return integration_halfwidth > 0.0 ? integration_halfwidth : 20.0 * omega_c;
    }
    QuadratureBudget budget() const { return {rel_tol, max_subdivisions}; }
};

// D(omega) for omega >= 0; rejects negative frequencies.
double spectral_density(const BathParams& b, double omega);

// Fourier transform of the bath autocorrelation, total on all real omega:
//   T > 0, w != 0 : (pi alpha / 2) (|w| coth(|w|/2T) + w) exp(-|w|/omega_c)
//   T > 0, w == 0 : pi alpha T           (the w -> 0 limit)
//   T == 0        : pi alpha w exp(-w/omega_c) for w > 0, else 0,
//                   with c(0) optionally overridden (see BathParams).
double correlation_ft(const BathParams& b, double omega);

// Detailed-balance diagnostic c(-omega)/c(omega); equals exp(-omega/T) for
// T > 0. Returns 0 when both rates vanish (decoupled bath, or T = 0 with
// omega > 0); throws std::domain_error when only the denominator vanishes.
double kms_ratio(const BathParams& b, double omega);

// s(omega) = (P/2pi) int c(x)/(x-omega) dx, evaluated with the symmetrized
// interior window plus adaptive quadrature on the truncated exterior.
double hilbert_transform_s(const BathParams& b, double omega,
                           const PVQuadratureConfig& cfg = {});

} // namespace qgp
