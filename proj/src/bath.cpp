#include "qgp/bath.hpp"

#include "qgp/errors.hpp"
#include "qgp/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgp {

void validate_bath(const BathParams& b) {
    if (!(b.alpha >= 0.0)) throw std::invalid_argument("bath: alpha must be >= 0");
    if (!(b.omega_c > 0.0)) throw std::invalid_argument("bath: omega_c must be > 0");
    if (!(b.temperature >= 0.0)) throw std::invalid_argument("bath: temperature must be >= 0");
    if (!(b.c0_override_temperature >= 0.0))
        throw std::invalid_argument("bath: c0 override temperature must be >= 0");
}

double spectral_density(const BathParams& b, double omega) {
    if (omega < 0.0) {
        std::ostringstream os;
        os << "spectral density defined for omega >= 0, got " << omega;
        throw std::invalid_argument(os.str());
    }
    return 0.5 * b.alpha * omega * std::exp(-omega / b.omega_c);
}

double correlation_ft(const BathParams& b, double omega) {
    if (b.alpha == 0.0) return 0.0;
    const double aw = std::abs(omega);
    const double cutoff = std::exp(-aw / b.omega_c);

    if (b.temperature == 0.0) {
        if (omega > 0.0) return kPi * b.alpha * omega * cutoff;
        if (omega == 0.0 && b.c0_override_temperature > 0.0)
            return kPi * b.alpha * b.c0_override_temperature;
        return 0.0;
    }

    if (omega == 0.0) return kPi * b.alpha * b.temperature;

    // Split the emission/absorption branches so neither suffers cancellation:
    //   w > 0: (pi a/2)(w coth(x/2) + w) = pi a w (1 + 1/(e^x - 1))
    //   w < 0: (pi a/2)(|w| coth(x/2) - |w|) = pi a |w| / (e^x - 1)
    // expm1 keeps e^x - 1 accurate for small x and saturates to inf for
    // x > 709, where the absorption rate correctly underflows to zero.
    const double x = aw / b.temperature;
    const double em1 = std::expm1(x);
    if (omega > 0.0) return kPi * b.alpha * aw * (1.0 + 1.0 / em1) * cutoff;
    return kPi * b.alpha * (aw / em1) * cutoff;
}

double kms_ratio(const BathParams& b, double omega) {
    if (omega == 0.0) throw std::invalid_argument("KMS ratio undefined at omega = 0");
    const double num = correlation_ft(b, -omega);
    const double den = correlation_ft(b, omega);
    if (den == 0.0) {
        if (num == 0.0) return 0.0;
        throw std::domain_error("KMS ratio undefined: c(omega) = 0 while c(-omega) > 0");
    }
    return num / den;
}

double hilbert_transform_s(const BathParams& b, double omega, const PVQuadratureConfig& cfg) {
    validate_bath(b);
    if (b.alpha == 0.0) return 0.0;

    const double H = cfg.resolved_halfwidth(b.omega_c);
    const double h = cfg.interior_halfwidth;
    const QuadratureBudget budget = cfg.budget();
    auto c = [&b](double x) { return correlation_ft(b, x); };

    double total = pv_interior_integral(c, omega, h, budget);

    // Exterior: [-H, omega-h] and [omega+h, H], split at the kink of c at x = 0.
    auto exterior = [&](double lo, double hi) {
        if (hi <= lo) return 0.0;
        auto integrand = [&](double x) { return c(x) / (x - omega); };
        if (lo < 0.0 && hi > 0.0) {
            return integrate_adaptive(integrand, lo, 0.0, budget) +
                   integrate_adaptive(integrand, 0.0, hi, budget);
        }
        return integrate_adaptive(integrand, lo, hi, budget);
    };
    total += exterior(-H, omega - h);
    total += exterior(omega + h, H);

    return total / (2.0 * kPi);
}

} // namespace qgp
