#include "qgp/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgp {

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

void validate_density(const Matrix2c& m, double herm_tol, double trace_tol, double pos_tol) {
    const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm_dev <= herm_tol)) {
        std::ostringstream os;
        os << "density matrix not Hermitian: max |rho - rho^dag| = " << herm_dev;
        throw std::invalid_argument(os.str());
    }
    const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
    if (!(trace_dev <= trace_tol)) {
        std::ostringstream os;
        os << "density matrix trace deviates from 1 by " << trace_dev;
        throw std::invalid_argument(os.str());
    }
    // min eigenvalue of a Hermitian 2x2 = (tr - sqrt(tr^2 - 4 det))/2
    const double tr  = m.trace().real();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double disc = std::max(0.0, tr * tr - 4.0 * det);
    const double min_eig = 0.5 * (tr - std::sqrt(disc));
    if (!(min_eig >= -pos_tol)) {
        std::ostringstream os;
        os << "density matrix not positive semidefinite: min eigenvalue = " << min_eig;
        throw std::invalid_argument(os.str());
    }
}

DensityMatrix density_from_matrix(const Matrix2c& m) {
    validate_density(m);
    return DensityMatrix{m};
}

DensityMatrix bloch_to_density(const BlochVector& r) {
    const double n = r.norm();
    if (!(n <= 1.0 + kPositivityTol)) {
        std::ostringstream os;
        os << "Bloch vector outside the unit ball: |r| = " << n;
        throw std::invalid_argument(os.str());
    }
    Matrix2c m;
    m << Complex(0.5 * (1.0 + r.z), 0.0), Complex(0.5 * r.x, -0.5 * r.y),
         Complex(0.5 * r.x, 0.5 * r.y),   Complex(0.5 * (1.0 - r.z), 0.0);
    return DensityMatrix{m};
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    const Matrix2c& m = rho.m;
    BlochVector r;
    r.x = 2.0 * m(1, 0).real();
    r.y = 2.0 * m(1, 0).imag();
    r.z = (m(0, 0) - m(1, 1)).real();
    return r;
}

Vector2c gauge_fix(const Vector2c& v) {
    int pivot = (std::abs(v(0)) > kGaugePivotTol) ? 0 : 1;
    const double mag = std::abs(v(pivot));
    if (mag <= kGaugePivotTol) return v; // numerically null, leave untouched
    return v * (std::conj(v(pivot)) / mag);
}

Spectral2 eig_hermitian2(const DensityMatrix& rho) {
    const BlochVector r = density_to_bloch(rho);
    const double n = r.norm();

    Spectral2 out;
    out.p = {0.5 * (1.0 + n), 0.5 * (1.0 - n)};
    out.degenerate = n < kDegeneracyTol;

    if (out.degenerate) {
        // Eigenbasis is arbitrary; return the computational basis.
        out.w[0] = Vector2c(1.0, 0.0);
        out.w[1] = Vector2c(0.0, 1.0);
        return out;
    }

    const double nx = r.x / n, ny = r.y / n, nz = r.z / n;
    Vector2c plus;
    if (nz >= 0.0) {
        const double c = std::sqrt(0.5 * (1.0 + nz));
        plus = Vector2c(Complex(c, 0.0), Complex(nx, ny) / (2.0 * c));
    } else {
        const double s = std::sqrt(0.5 * (1.0 - nz));
        plus = Vector2c(Complex(nx, -ny) / (2.0 * s), Complex(s, 0.0));
    }
    // Orthogonal complement; points along -r.
    const Vector2c minus(-std::conj(plus(1)), std::conj(plus(0)));

    out.w[0] = gauge_fix(plus);
    out.w[1] = gauge_fix(minus);
    return out;
}

Complex overlap(const Vector2c& u, const Vector2c& v) { return u.dot(v); }

} // namespace qgp
