// quadrature.hpp — Adaptive Simpson integration and the symmetrized
// principal-value window used by the bath Hilbert transform.

#pragma once

#include <functional>

namespace qgp {

struct QuadratureBudget {
    double rel_tol = 1e-10;
    long max_subdivisions = 200000;
};

// Adaptive Simpson on [a, b]. The acceptance test per interval is the classic
// |S_fine - S_coarse| <= 15 * tol with tol split between halves; the overall
// tolerance is rel_tol scaled by the magnitude of the first whole-interval
// estimate. Throws NonConvergence when the subdivision budget is exhausted.
double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b, const QuadratureBudget& budget);

// Symmetrized principal-value window: P int_{omega-h}^{omega+h} f(x)/(x-omega) dx
// evaluated as int_0^h [f(omega+u) - f(omega-u)]/u du, which is regular at u=0.
double pv_interior_integral(const std::function<double(double)>& f,
                            double omega, double h, const QuadratureBudget& budget);

} // namespace qgp
