#include "qgp/validation.hpp"

#include "qgp/config.hpp"
#include "qgp/errors.hpp"
#include "qgp/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

namespace qgp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Worst drift seen across every trajectory the suite evolves.
struct Monitors {
    double hermiticity = 0.0;
    double trace = 0.0;
    double negativity = 0.0;

    void absorb(const Trajectory& traj) {
        hermiticity = std::max(hermiticity, traj.max_hermiticity_correction);
        trace = std::max(trace, traj.max_trace_correction);
        negativity = std::max(negativity, std::max(0.0, -traj.min_eigenvalue));
    }
    void absorb(const SweepResult& result) {
        for (const auto& r : result.records) {
            hermiticity = std::max(hermiticity, r.max_hermiticity_correction);
            trace = std::max(trace, r.max_trace_correction);
            negativity = std::max(negativity, std::max(0.0, -r.min_eigenvalue));
        }
    }
    double worst() const { return std::max({hermiticity, trace, negativity}); }
};

ExperimentConfig study_config(double mu_x, double mu_z, double temperature,
                              PhaseWindow window, double periods = 1.0) {
    ExperimentConfig cfg; // bath defaults: alpha = 1e-2, omega_c = 1e2
    cfg.qubit.mu_x = mu_x;
    cfg.qubit.mu_z = mu_z;
    cfg.bath.temperature = temperature;
    cfg.phase_window = window;
    cfg.integrator.periods = periods;
    return cfg;
}

double pipeline_phase(double theta, const ExperimentConfig& cfg, const DaviesGenerator& gen,
                      Monitors& monitors) {
    const Trajectory traj = evolve(initial_state(theta), gen, cfg.integrator);
    monitors.absorb(traj);
    const PhaseResult phase = geometric_phase(spectral_track(traj));
    return phase_representative(phase.phi, cfg.phase_window);
}

struct ExtremaCount {
    int maxima = 0;
    int minima = 0;
};

ExtremaCount count_interior_extrema(const std::vector<double>& y, double prominence) {
    ExtremaCount count;
    for (std::size_t j = 1; j + 1 < y.size(); ++j) {
        if (y[j] > y[j - 1] + prominence && y[j] > y[j + 1] + prominence) ++count.maxima;
        if (y[j] < y[j - 1] - prominence && y[j] < y[j + 1] - prominence) ++count.minima;
    }
    return count;
}

bool sweep_clean(const SweepResult& result, std::string& error_out) {
    for (const auto& r : result.records) {
        if (!r.error.empty()) {
            std::ostringstream os;
            os << r.error << " at theta = " << r.theta;
            error_out = os.str();
            return false;
        }
    }
    return true;
}

std::vector<double> sweep_phis(const SweepResult& result) {
    std::vector<double> phis;
    phis.reserve(result.records.size());
    for (const auto& r : result.records) phis.push_back(r.phi);
    return phis;
}

double trace_distance(const Matrix2c& a, const Matrix2c& b) {
    const Matrix2c d = a - b;
    const double tr = d.trace().real();
    const double det = (d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return 0.5 * (std::abs(0.5 * (tr + disc)) + std::abs(0.5 * (tr - disc)));
}

CriterionResult criterion_free_phase(Monitors& monitors) {
    CriterionResult r{1, "free-phase anchor Phi = pi(1+cos theta)", false, 0, 1e-6, "<=", ""};
    const auto t0 = Clock::now();
    const ExperimentConfig cfg = study_config(0.0, 0.0, 0.0, PhaseWindow::zero_to_2pi);
    const DaviesGenerator gen = build_generator(cfg.qubit, cfg.bath, cfg.pv, cfg.generator);
    double worst = 0.0;
    for (int j = 0; j < 50; ++j) {
        const double theta = kPi * (j + 0.5) / 50.0;
        const double phi = pipeline_phase(theta, cfg, gen, monitors);
        worst = std::max(worst, phase_distance(phi, free_phase(theta)));
    }
    r.measured = worst;
    r.pass = worst <= r.bound;
    std::ostringstream os;
    os << "50-point grid, " << fmt(seconds_since(t0)) << " s";
    r.detail = os.str();
    return r;
}

CriterionResult criterion_gibbs() {
    CriterionResult r{2, "Gibbs stationarity at t = 1e3 periods", false, 0, 1e-6, "<=", ""};
    const ExperimentConfig cfg = study_config(0.3, 0.0, 1.0, PhaseWindow::zero_to_2pi);
    const DaviesGenerator gen = build_generator(cfg.qubit, cfg.bath, cfg.pv, cfg.generator);

    const double z = std::exp(-0.5) + std::exp(0.5);
    Matrix2c gibbs = Matrix2c::Zero();
    gibbs(0, 0) = std::exp(-0.5) / z; // 0.2689...
    gibbs(1, 1) = std::exp(0.5) / z;  // 0.7311...

    double worst = 0.0;
    for (double theta : {0.3, 1.5707963267948966, 2.8}) {
        const DensityMatrix rho =
            evolve_exact(initial_state(theta), gen, 1e3 * kFreePeriod);
        worst = std::max(worst, trace_distance(rho.m, gibbs));
    }
    r.measured = worst;
    r.pass = worst <= r.bound;
    r.detail = "three initial states, trace distance to diag(0.2689, 0.7311)";
    return r;
}

CriterionResult criterion_kms() {
    CriterionResult r{3, "KMS detailed balance c(-w)/c(w) = exp(-w/T)", false, 0, 1e-10, "<=", ""};
    double worst = 0.0;
    for (double temperature : {0.25, 1.0, 4.0}) {
        BathParams bath;
        bath.temperature = temperature;
        for (double omega : {0.1, 1.0, 10.0}) {
            const double expected = std::exp(-omega / temperature);
            worst = std::max(worst, std::abs(kms_ratio(bath, omega) - expected) / expected);
        }
    }
    r.measured = worst;
    r.pass = worst <= r.bound;
    r.detail = "relative, omega in {0.1, 1, 10}, T in {0.25, 1, 4}";
    return r;
}

CriterionResult criterion_integrator_vs_exact(Monitors& monitors) {
    CriterionResult r{4, "RK4 vs superoperator exponential at t = period", false, 0, 1e-8, "<=", ""};
    const double theta = 1.1;
    double worst = 0.0;
    for (double temperature : {0.0, 1.0}) {
        for (auto [mu_x, mu_z] : {std::pair{0.3, 0.0}, {0.0, 0.5}, {0.3, 0.5}}) {
            const ExperimentConfig cfg =
                study_config(mu_x, mu_z, temperature, PhaseWindow::zero_to_2pi);
            const DaviesGenerator gen =
                build_generator(cfg.qubit, cfg.bath, cfg.pv, cfg.generator);
            const Trajectory traj = evolve(initial_state(theta), gen, cfg.integrator);
            monitors.absorb(traj);
            const DensityMatrix exact = evolve_exact(initial_state(theta), gen, kFreePeriod);
            worst = std::max(worst,
                             (traj.states.back().m - exact.m).cwiseAbs().maxCoeff());
        }
    }
    r.measured = worst;
    r.pass = worst <= r.bound;
    r.detail = "max entrywise, 6 coupling/temperature combinations, theta = 1.1";
    return r;
}

CriterionResult criterion_gauge_fuzz(Monitors& monitors) {
    CriterionResult r{5, "gauge invariance under eigenvector re-phasing", false, 0, 1e-10, "<=", ""};
    const ExperimentConfig cfg = study_config(0.3, 0.0, 0.0, PhaseWindow::zero_to_2pi);
    const DaviesGenerator gen = build_generator(cfg.qubit, cfg.bath, cfg.pv, cfg.generator);
    const Trajectory traj = evolve(initial_state(0.5 * kPi), gen, cfg.integrator);
    monitors.absorb(traj);
    const SpectralTrajectory st = spectral_track(traj);
    const double base = geometric_phase(st).phi;
    const double t_final = st.times.back();

    std::mt19937_64 rng(20240817u);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> slope(-3.0, 3.0);

    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::array<std::array<double, 4>, 2> coeff = {
            std::array<double, 4>{angle(rng), slope(rng), slope(rng), angle(rng)},
            std::array<double, 4>{angle(rng), slope(rng), slope(rng), angle(rng)}};
        auto chi = [&](int branch, double t) {
            const auto& c = coeff[branch];
            return c[0] + c[1] * t / t_final + c[2] * std::sin(2.0 * kPi * t / t_final + c[3]);
        };
        const double rephased = geometric_phase(apply_branch_phases(st, chi)).phi;
        worst = std::max(worst, phase_distance(rephased, base));
    }
    r.measured = worst;
    r.pass = worst <= r.bound;
    r.detail = "100 random smooth re-phasings";
    return r;
}

CriterionResult criterion_antisymmetry(Monitors& monitors) {
    CriterionResult r{7, "dephasing antisymmetry Phi(pi/2+t)+Phi(pi/2-t) = 2pi", false, 0, 1e-4,
                      "<=", ""};
    const ExperimentConfig cfg = study_config(0.0, 0.5, 0.5, PhaseWindow::zero_to_2pi);
    const DaviesGenerator gen = build_generator(cfg.qubit, cfg.bath, cfg.pv, cfg.generator);
    double worst = 0.0;
    for (double theta : {0.1, 0.3, 0.6, 1.2}) {
        const double above = pipeline_phase(0.5 * kPi + theta, cfg, gen, monitors);
        const double below = pipeline_phase(0.5 * kPi - theta, cfg, gen, monitors);
        worst = std::max(worst, std::abs(above + below - 2.0 * kPi));
    }
    r.measured = worst;
    r.pass = worst <= r.bound;
    r.detail = "T = 0.5, mu_z = 0.5, offsets {0.1, 0.3, 0.6, 1.2}";
    return r;
}

CriterionResult criterion_fig2_shape(Monitors& monitors) {
    CriterionResult r{8, "dissipative sweep shape (one max, one min, endpoints)", false, 0, 0.15,
                      "<=", ""};
    const ExperimentConfig cfg = study_config(0.3, 0.0, 0.0, PhaseWindow::minus_pi_to_pi);
    const SweepResult main_sweep = run_sweep(cfg);
    monitors.absorb(main_sweep);

    std::string sweep_error;
    if (!sweep_clean(main_sweep, sweep_error)) {
        r.detail = "sweep failed: " + sweep_error;
        return r;
    }
    const ExtremaCount extrema = count_interior_extrema(sweep_phis(main_sweep), 1e-6);
    const double tail = phase_distance(main_sweep.records.back().phi, 0.0);

    const ExperimentConfig weak_cfg = study_config(0.05, 0.0, 0.0, PhaseWindow::minus_pi_to_pi);
    const SweepResult weak = run_sweep(weak_cfg);
    monitors.absorb(weak);
    if (!sweep_clean(weak, sweep_error)) {
        r.detail = "weak-coupling sweep failed: " + sweep_error;
        return r;
    }
    double weak_dev = 0.0;
    for (const auto& rec : weak.records)
        weak_dev = std::max(weak_dev, phase_distance(rec.phi, free_phase(rec.theta)));

    r.measured = weak_dev;
    r.pass = extrema.maxima == 1 && extrema.minima == 1 && tail <= 2e-2 && weak_dev <= 0.15;
    std::ostringstream os;
    os << "mu_x=0.3: maxima " << extrema.maxima << ", minima " << extrema.minima
       << ", |Phi(theta->pi)| = " << fmt(tail) << " (<= 2e-2); mu_x=0.05 free deviation "
       << fmt(weak_dev) << " (<= 0.15)";
    r.detail = os.str();
    return r;
}

CriterionResult criterion_fig4_trend(Monitors& monitors) {
    CriterionResult r{9, "temperature trend (max decreasing, theta->pi lifted)", false, 0, 0.05,
                      ">", ""};
    std::vector<double> maxima;
    std::string sweep_error;
    for (double temperature : {0.0, 0.5, 1.0}) {
        const ExperimentConfig cfg =
            study_config(0.3, 0.0, temperature, PhaseWindow::minus_pi_to_pi);
        const SweepResult sweep = run_sweep(cfg);
        monitors.absorb(sweep);
        if (!sweep_clean(sweep, sweep_error)) {
            r.detail = "sweep failed: " + sweep_error;
            return r;
        }
        double high = -kPi;
        for (const auto& rec : sweep.records) high = std::max(high, rec.phi);
        maxima.push_back(high);
    }
    const bool decreasing = maxima[0] > maxima[1] && maxima[1] > maxima[2];

    const ExperimentConfig hot = study_config(0.3, 0.0, 1.0, PhaseWindow::minus_pi_to_pi);
    const DaviesGenerator gen = build_generator(hot.qubit, hot.bath, hot.pv, hot.generator);
    const double phi_tail = pipeline_phase(3.0, hot, gen, monitors);

    r.measured = std::abs(phi_tail);
    r.pass = decreasing && std::abs(phi_tail) > r.bound;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "maxima at T = {0, 0.5, 1}: %.6f, %.6f, %.6f (%s); |Phi(3.0)| at T=1 = %.4f",
                  maxima[0], maxima[1], maxima[2],
                  decreasing ? "decreasing" : "NOT decreasing", std::abs(phi_tail));
    r.detail = buf;
    return r;
}

CriterionResult criterion_multi_period(Monitors& monitors) {
    CriterionResult r{10, "multi-period persistence of sweep shape (n = 2, 3)", false, 0, 2e-2,
                      "<=", ""};
    double worst_tail = 0.0;
    bool nonmonotone = true;
    std::ostringstream os;
    std::string sweep_error;
    for (double periods : {2.0, 3.0}) {
        const ExperimentConfig cfg =
            study_config(0.3, 0.0, 0.0, PhaseWindow::minus_pi_to_pi, periods);
        const SweepResult sweep = run_sweep(cfg);
        monitors.absorb(sweep);
        if (!sweep_clean(sweep, sweep_error)) {
            r.detail = "sweep failed: " + sweep_error;
            return r;
        }
        const ExtremaCount extrema = count_interior_extrema(sweep_phis(sweep), 1e-6);
        const double tail = phase_distance(sweep.records.back().phi, 0.0);
        worst_tail = std::max(worst_tail, tail);
        nonmonotone = nonmonotone && extrema.maxima >= 1 && extrema.minima >= 1;
        os << "n=" << periods << ": maxima " << extrema.maxima << ", minima " << extrema.minima
           << ", tail " << fmt(tail) << "; ";
    }
    r.measured = worst_tail;
    r.pass = nonmonotone && worst_tail <= r.bound;
    r.detail = os.str();
    return r;
}

CriterionResult criterion_pv_anchor() {
    CriterionResult r{11, "principal-value anchor s(0) = alpha omega_c / 2", false, 0, 1e-8,
                      "<=", ""};
    BathParams bath; // T = 0, alpha = 1e-2, omega_c = 1e2
    const double s0 = hilbert_transform_s(bath, 0.0);
    const double expected = 0.5 * bath.alpha * bath.omega_c;
    r.measured = std::abs(s0 - expected);
    r.pass = r.measured <= r.bound;
    std::ostringstream os;
    os << "s(0) = " << s0 << ", expected " << expected;
    r.detail = os.str();
    return r;
}

} // namespace

void print_result(std::ostream& os, const CriterionResult& r) {
    char head[128];
    std::snprintf(head, sizeof head, "[%2d] %s  %-55s", r.id, r.pass ? "PASS" : "FAIL",
                  r.name.c_str());
    os << head << " measured " << fmt(r.measured) << " " << r.comparison << " " << fmt(r.bound);
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << "\n";
}

std::vector<CriterionResult> run_acceptance_suite(std::ostream* progress) {
    std::vector<CriterionResult> results;
    Monitors monitors;
    const auto t0 = Clock::now();

    auto push = [&](CriterionResult r) {
        if (progress) print_result(*progress, r);
        results.push_back(std::move(r));
    };

    push(criterion_free_phase(monitors));
    push(criterion_gibbs());
    push(criterion_kms());
    push(criterion_integrator_vs_exact(monitors));
    push(criterion_gauge_fuzz(monitors));

    // Criteria 7-10 run before 6 so the drift monitor covers every
    // trajectory the suite evolves.
    CriterionResult antisym = criterion_antisymmetry(monitors);
    CriterionResult fig2 = criterion_fig2_shape(monitors);
    CriterionResult fig4 = criterion_fig4_trend(monitors);
    CriterionResult multi = criterion_multi_period(monitors);

    CriterionResult drift{6, "drift monitors along acceptance trajectories", false, 0, 1e-9,
                          "<=", ""};
    drift.measured = monitors.worst();
    drift.pass = drift.measured <= drift.bound;
    {
        std::ostringstream os;
        os << "hermiticity " << fmt(monitors.hermiticity) << ", trace " << fmt(monitors.trace)
           << ", negativity " << fmt(monitors.negativity);
        drift.detail = os.str();
    }
    push(std::move(drift));
    push(std::move(antisym));
    push(std::move(fig2));
    push(std::move(fig4));
    push(std::move(multi));
    push(criterion_pv_anchor());

    if (progress) {
        *progress << "total " << fmt(seconds_since(t0)) << " s, "
                  << (all_passed(results) ? "all criteria passed" : "FAILURES present") << "\n";
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace qgp
