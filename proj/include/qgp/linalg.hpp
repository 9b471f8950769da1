// linalg.hpp — Complex 2x2 matrix substrate: Pauli algebra, Bloch vectors,
// closed-form Hermitian eigendecomposition with a deterministic gauge.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace qgp {

using Complex  = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

inline constexpr double kPi = 3.14159265358979323846;

// Free evolution period 2*pi*hbar/epsilon in the global units (hbar = epsilon = 1).
inline constexpr double kFreePeriod = 2.0 * kPi;

namespace pauli {

inline Matrix2c identity() { return Matrix2c::Identity(); }

inline Matrix2c x() {
    Matrix2c m;
    m << 0, 1, 1, 0;
    return m;
}

inline Matrix2c y() {
    Matrix2c m;
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline Matrix2c z() {
    Matrix2c m;
    m << 1, 0, 0, -1;
    return m;
}

// Projector onto the excited state |1> = (1,0).
inline Matrix2c projector_up() {
    Matrix2c m;
    m << 1, 0, 0, 0;
    return m;
}

// Projector onto the ground state |-1> = (0,1).
inline Matrix2c projector_down() {
    Matrix2c m;
    m << 0, 0, 0, 1;
    return m;
}

} // namespace pauli

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

// 2x2 Hermitian, unit-trace, positive-semidefinite state.
struct DensityMatrix {
    Matrix2c m = Matrix2c::Zero();
};

// Eigendecomposition of a density matrix: eigenvalues sorted descending,
// orthonormal eigenvectors in a deterministic gauge (first component of
// magnitude > 1e-12 made real positive).
struct Spectral2 {
    std::array<double, 2> p{};
    std::array<Vector2c, 2> w{};
    bool degenerate = false; // |bloch| < 1e-9, eigenbasis arbitrary
};

inline constexpr double kHermitianTol   = 1e-12;
inline constexpr double kTraceTol       = 1e-12;
inline constexpr double kPositivityTol  = 1e-10;
inline constexpr double kDegeneracyTol  = 1e-9;  // on |bloch|
inline constexpr double kGaugePivotTol  = 1e-12; // smallest component used for gauge fixing

// Throws std::invalid_argument if m is not Hermitian/unit-trace/PSD within tolerance.
void validate_density(const Matrix2c& m,
                      double herm_tol = kHermitianTol,
                      double trace_tol = kTraceTol,
                      double pos_tol = kPositivityTol);

DensityMatrix density_from_matrix(const Matrix2c& m);

// rho = (I + r.sigma)/2; rejects |r| > 1 + 1e-10.
DensityMatrix bloch_to_density(const BlochVector& r);

// r_k = Tr(rho sigma_k).
BlochVector density_to_bloch(const DensityMatrix& rho);

// Closed-form eigendecomposition via the Bloch vector: p = (1 +- |r|)/2,
// eigenvectors are the spinors along +-r/|r|.
Spectral2 eig_hermitian2(const DensityMatrix& rho);

// Conjugate-linear in the first argument.
Complex overlap(const Vector2c& u, const Vector2c& v);

// Multiplies v by a unit phase so the first component with magnitude
// > kGaugePivotTol is real positive.
Vector2c gauge_fix(const Vector2c& v);

} // namespace qgp
