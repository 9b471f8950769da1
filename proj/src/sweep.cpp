#include "qgp/sweep.hpp"

#include "qgp/errors.hpp"
#include "qgp/format.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace qgp {

namespace {

std::string fmt(double v) { return format_shortest(v); }

SweepRecord evaluate_point(double theta, const DaviesGenerator& gen,
                           const ExperimentConfig& cfg) {
    SweepRecord rec;
    rec.theta = theta;
    rec.phi = std::numeric_limits<double>::quiet_NaN();
    rec.magnitude = std::numeric_limits<double>::quiet_NaN();
    try {
        const Trajectory traj = evolve(initial_state(theta), gen, cfg.integrator);
        rec.max_hermiticity_correction = traj.max_hermiticity_correction;
        rec.max_trace_correction = traj.max_trace_correction;
        rec.min_eigenvalue = traj.min_eigenvalue;

        const SpectralTrajectory st = spectral_track(traj);
        rec.degenerate =
            std::any_of(st.degenerate.begin(), st.degenerate.end(), [](char d) { return d != 0; });

        const PhaseResult phase = geometric_phase(st);
        rec.phi = phase_representative(phase.phi, cfg.phase_window);
        rec.magnitude = phase.magnitude;
    } catch (const PositivityViolation&) {
        rec.error = "PositivityViolation";
    } catch (const IntegratorDrift&) {
        rec.error = "IntegratorDrift";
    } catch (const BranchAmbiguity&) {
        rec.error = "BranchAmbiguity";
    } catch (const DegeneratePhase&) {
        rec.error = "DegeneratePhase";
    } catch (const VanishingVisibility&) {
        rec.error = "VanishingVisibility";
    }
    return rec;
}

} // namespace

SweepResult run_sweep(const ExperimentConfig& cfg) {
    const std::vector<double> thetas = theta_points(cfg.theta_grid);
    const DaviesGenerator gen = build_generator(cfg.qubit, cfg.bath, cfg.pv, cfg.generator);

    SweepResult result;
    result.records.resize(thetas.size());

    unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, thetas.size());

    if (workers <= 1) {
        for (std::size_t i = 0; i < thetas.size(); ++i)
            result.records[i] = evaluate_point(thetas[i], gen, cfg);
        return result;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= thetas.size()) return;
            result.records[i] = evaluate_point(thetas[i], gen, cfg);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return result;
}

std::string sweep_csv_text(const ExperimentConfig& cfg, const SweepResult& result) {
    std::ostringstream os;
    os << "# epsilon=" << fmt(cfg.qubit.epsilon) << " mu_x=" << fmt(cfg.qubit.mu_x)
       << " mu_z=" << fmt(cfg.qubit.mu_z) << " alpha=" << fmt(cfg.bath.alpha)
       << " omega_c=" << fmt(cfg.bath.omega_c) << " temperature=" << fmt(cfg.bath.temperature)
       << " c0_override=" << fmt(cfg.bath.c0_override_temperature)
       << " lamb_shift=" << (cfg.generator.include_lamb_shift ? "on" : "off")
       << " method=" << method_name(cfg.integrator.method)
       << " steps_per_period=" << cfg.integrator.steps_per_period
       << " periods=" << fmt(cfg.integrator.periods)
       << " window=" << window_name(cfg.phase_window)
       << " count=" << cfg.theta_grid.count << " theta_min=" << fmt(cfg.theta_grid.min)
       << " theta_max=" << fmt(cfg.theta_grid.max)
       << " include_endpoints=" << (cfg.theta_grid.include_endpoints ? "on" : "off") << "\n";
    os << "theta,phi,magnitude,degenerate,mu_x,mu_z,alpha,omega_c,temperature,periods,error\n";
    for (const auto& r : result.records) {
        os << fmt(r.theta) << "," << fmt(r.phi) << "," << fmt(r.magnitude) << ","
           << (r.degenerate ? 1 : 0) << "," << fmt(cfg.qubit.mu_x) << ","
           << fmt(cfg.qubit.mu_z) << "," << fmt(cfg.bath.alpha) << ","
           << fmt(cfg.bath.omega_c) << "," << fmt(cfg.bath.temperature) << ","
           << fmt(cfg.integrator.periods) << "," << r.error << "\n";
    }
    return os.str();
}

std::string sweep_svg_text(const std::string& title, PhaseWindow window,
                           const std::vector<std::pair<std::string, const SweepResult*>>& curves) {
    SvgAxes axes;
    axes.title = title;
    axes.x_label = "theta / pi";
    axes.y_label = "Phi / pi";
    axes.x_min = 0.0;
    axes.x_max = 1.0;
    if (window == PhaseWindow::zero_to_2pi) {
        axes.y_min = 0.0;
        axes.y_max = 2.0;
    } else {
        axes.y_min = -1.0;
        axes.y_max = 1.0;
    }
    std::vector<SvgCurve> svg_curves;
    svg_curves.reserve(curves.size());
    for (const auto& [label, result] : curves) {
        SvgCurve c;
        c.label = label;
        for (const auto& r : result->records) {
            c.x.push_back(r.theta / kPi);
            c.y.push_back(r.phi / kPi);
        }
        svg_curves.push_back(std::move(c));
    }
    return render_svg_plot(axes, svg_curves);
}

std::vector<FigureCurve> figure_curves(int figure, const ExperimentConfig& base) {
    std::vector<FigureCurve> curves;
    auto add = [&](const std::string& label, const std::string& tag, ExperimentConfig cfg) {
        curves.push_back({label, tag, std::move(cfg)});
    };
    auto tagged = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return std::string(buf);
    };

    ExperimentConfig cfg = base;
    switch (figure) {
        case 1:
            cfg.qubit.mu_x = 0.0;
            cfg.bath.temperature = 0.0;
            cfg.phase_window = PhaseWindow::zero_to_2pi;
            for (double mu_z : {0.0, 0.5, 1.0, 1.5}) {
                cfg.qubit.mu_z = mu_z;
                add("mu_z = " + tagged(mu_z), "muz" + tagged(mu_z), cfg);
            }
            break;
        case 2:
            cfg.qubit.mu_z = 0.0;
            cfg.bath.temperature = 0.0;
            cfg.phase_window = PhaseWindow::minus_pi_to_pi;
            for (double mu_x : {0.05, 0.3, 0.4}) {
                cfg.qubit.mu_x = mu_x;
                add("mu_x = " + tagged(mu_x), "mux" + tagged(mu_x), cfg);
            }
            break;
        case 3:
            cfg.qubit.mu_x = 0.3;
            cfg.bath.temperature = 0.0;
            cfg.phase_window = PhaseWindow::minus_pi_to_pi;
            for (double mu_z : {0.0, 0.5, 1.0, 1.5}) {
                cfg.qubit.mu_z = mu_z;
                add("mu_z = " + tagged(mu_z), "muz" + tagged(mu_z), cfg);
            }
            break;
        case 4:
            cfg.qubit.mu_x = 0.3;
            cfg.qubit.mu_z = 0.0;
            cfg.phase_window = PhaseWindow::minus_pi_to_pi;
            for (double temperature : {0.0, 0.5, 1.0}) {
                cfg.bath.temperature = temperature;
                add("T = " + tagged(temperature), "T" + tagged(temperature), cfg);
            }
            break;
        default:
            throw ConfigError("figure number must be in 1..4");
    }
    return curves;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

} // namespace qgp
