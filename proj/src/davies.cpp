#include "qgp/davies.hpp"

#include "qgp/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgp {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Matrix4cd kron2(const Matrix2c& a, const Matrix2c& b) {
    Eigen::Matrix4cd k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return k;
}

Matrix2c unvec2(const Eigen::Vector4cd& v) {
    Matrix2c m;
    m << v(0), v(2), v(1), v(3);
    return m;
}

} // namespace

void validate_qubit(const QubitParams& q) {
    if (!(q.epsilon > 0.0)) throw std::invalid_argument("qubit: epsilon must be > 0");
    if (!(q.mu_x >= 0.0)) throw std::invalid_argument("qubit: mu_x must be >= 0");
    if (!(q.mu_z >= 0.0)) throw std::invalid_argument("qubit: mu_z must be >= 0");
}

std::array<JumpOperator, 4> build_jump_operators(const QubitParams& q, const BathParams& b) {
    validate_qubit(q);
    validate_bath(b);

    Matrix2c raising = Matrix2c::Zero();
    raising(0, 1) = q.mu_x; // mu_x |1><-1|
    Matrix2c lowering = Matrix2c::Zero();
    lowering(1, 0) = q.mu_x; // mu_x |-1><1|

    const double eps = q.epsilon;
    std::array<JumpOperator, 4> jumps;
    jumps[0] = {raising, +eps, correlation_ft(b, -eps)};
    jumps[1] = {lowering, -eps, correlation_ft(b, +eps)};
    jumps[2] = {q.mu_z * pauli::projector_up(), 0.0, correlation_ft(b, 0.0)};
    jumps[3] = {-q.mu_z * pauli::projector_down(), 0.0, correlation_ft(b, 0.0)};
    return jumps;
}

Matrix2c build_lamb_shift(const QubitParams& q, const BathParams& b,
                          const PVQuadratureConfig& cfg) {
    validate_qubit(q);
    validate_bath(b);

    Matrix2c h = Matrix2c::Zero();
    if (b.alpha == 0.0) return h;

    if (q.mu_x > 0.0) {
        const double mu2 = q.mu_x * q.mu_x;
        h += hilbert_transform_s(b, +q.epsilon, cfg) * mu2 * pauli::projector_down();
        h += hilbert_transform_s(b, -q.epsilon, cfg) * mu2 * pauli::projector_up();
    }
    if (q.mu_z > 0.0) {
        h += hilbert_transform_s(b, 0.0, cfg) * q.mu_z * q.mu_z * pauli::identity();
    }
    return h;
}

DaviesGenerator build_generator(const QubitParams& q, const BathParams& b,
                                const PVQuadratureConfig& cfg, const GeneratorOptions& opts) {
    DaviesGenerator g;
    g.effective_hamiltonian = 0.5 * q.epsilon * pauli::z();
    if (opts.include_lamb_shift) g.effective_hamiltonian += build_lamb_shift(q, b, cfg);
    g.jumps = build_jump_operators(q, b);
    return g;
}

Matrix2c apply_generator(const DaviesGenerator& g, const Matrix2c& rho) {
    const Matrix2c& h = g.effective_hamiltonian;
    Matrix2c out = -kI * (h * rho - rho * h);
    for (const auto& jump : g.jumps) {
        if (jump.rate == 0.0 || jump.matrix.isZero(0.0)) continue;
        const Matrix2c& a = jump.matrix;
        const Matrix2c ada = a.adjoint() * a;
        out += jump.rate * (a * rho * a.adjoint() - 0.5 * (ada * rho + rho * ada));
    }
    return out;
}

Superoperator4 to_superoperator(const DaviesGenerator& g) {
    const Matrix2c id = pauli::identity();
    const Matrix2c& h = g.effective_hamiltonian;
    Superoperator4 l = -kI * (kron2(id, h) - kron2(h.transpose(), id));
    for (const auto& jump : g.jumps) {
        if (jump.rate == 0.0 || jump.matrix.isZero(0.0)) continue;
        const Matrix2c& a = jump.matrix;
        const Matrix2c ada = a.adjoint() * a;
        l += jump.rate * (kron2(a.conjugate(), a) -
                          0.5 * kron2(id, ada) - 0.5 * kron2(ada.transpose(), id));
    }
    return l;
}

DensityMatrix stationary_state(const DaviesGenerator& g) {
    const Superoperator4 l = to_superoperator(g);
    Eigen::ComplexEigenSolver<Superoperator4> solver(l);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("stationary_state: eigen decomposition failed");

    const auto& vals = solver.eigenvalues();
    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
    const double null_tol = 1e-12 * scale;

    int best = 0;
    int null_count = 0;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(vals(i)) < std::abs(vals(best))) best = i;
        if (std::abs(vals(i)) <= null_tol) ++null_count;
    }
    if (null_count > 1) {
        std::ostringstream os;
        os << "stationary state not unique: null space dimension " << null_count;
        throw NonUniqueStationaryState(os.str());
    }
    if (null_count == 0) {
        throw std::runtime_error("stationary_state: no null eigenvalue found");
    }

    Matrix2c rho = unvec2(solver.eigenvectors().col(best));
    rho = Matrix2c(0.5 * (rho + rho.adjoint().eval()));
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-14)
        throw std::runtime_error("stationary_state: null vector is traceless");
    rho /= tr;
    validate_density(rho, 1e-10, 1e-10, 1e-9);
    return DensityMatrix{rho};
}

} // namespace qgp
