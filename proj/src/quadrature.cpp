#include "qgp/quadrature.hpp"

#include "qgp/errors.hpp"

#include <cmath>
#include <sstream>

namespace qgp {

namespace {

double simpson(double h, double fa, double fm, double fb) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

struct AdaptiveState {
    const std::function<double(double)>& f;
    long used = 0;
    long budget = 0;
};

double simpson_adaptive(AdaptiveState& st, double a, double m, double b,
                        double fa, double fm, double fb, double whole, double tol) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left  = simpson(m - a, fa, flm, fm);
    const double right = simpson(b - m, fm, frm, fb);
    const double err = left + right - whole;

    if (std::abs(err) <= 15.0 * tol || lm <= a || rm >= b) {
        return left + right + err / 15.0;
    }
    if (++st.used > st.budget) {
        std::ostringstream os;
        os << "adaptive Simpson exceeded " << st.budget << " subdivisions on ["
           << a << ", " << b << "]";
        throw NonConvergence(os.str());
    }
    const double half_tol = 0.5 * tol;
    return simpson_adaptive(st, a, lm, m, fa, flm, fm, left, half_tol) +
           simpson_adaptive(st, m, rm, b, fm, frm, fb, right, half_tol);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b, const QuadratureBudget& budget) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(b - a, fa, fm, fb);

    // Scale the relative tolerance by a coarse magnitude estimate; the
    // (|fa|+4|fm|+|fb|) term keeps the scale sane for near-cancelling integrands.
    const double scale = std::max(std::abs(whole),
                                  (std::abs(fa) + 4.0 * std::abs(fm) + std::abs(fb)) *
                                      (b - a) / 6.0);
    const double tol = budget.rel_tol * scale;

    AdaptiveState st{f, 0, budget.max_subdivisions};
    return sign * simpson_adaptive(st, a, m, b, fa, fm, fb, whole, tol);
}

double pv_interior_integral(const std::function<double(double)>& f,
                            double omega, double h, const QuadratureBudget& budget) {
    auto symmetrized = [&](double u) {
        if (u <= 0.0) {
            // u -> 0 limit: 2 f'(omega), by a central difference well above roundoff
            const double du = 1e-6 * std::max(1.0, std::abs(omega));
            return (f(omega + du) - f(omega - du)) / du;
        }
        return (f(omega + u) - f(omega - u)) / u;
    };
    return integrate_adaptive(symmetrized, 0.0, h, budget);
}

} // namespace qgp
