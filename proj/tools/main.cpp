// qgp — command line front end: bath rate tables, geometric-phase sweeps over
// the initial state, preset figure families, and the built-in validation suite.

#include "qgp/config.hpp"
#include "qgp/errors.hpp"
#include "qgp/sweep.hpp"
#include "qgp/validation.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <sstream>

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct Flags {
    std::string config_path;
    double periods = kUnset;
    std::string window;
    double c0_override = kUnset;
    bool no_lamb_shift = false;
    bool svg = false;
    std::string out;
};

qgp::ExperimentConfig assemble_config(const Flags& flags) {
    qgp::ExperimentConfig cfg;
    if (!flags.config_path.empty()) cfg = qgp::load_config_file(flags.config_path);
    if (!std::isnan(flags.periods)) cfg.integrator.periods = flags.periods;
    if (!flags.window.empty()) cfg.phase_window = qgp::parse_window(flags.window);
    if (!std::isnan(flags.c0_override)) cfg.bath.c0_override_temperature = flags.c0_override;
    if (flags.no_lamb_shift) cfg.generator.include_lamb_shift = false;
    qgp::validate_qubit(cfg.qubit);
    qgp::validate_bath(cfg.bath);
    qgp::validate_integrator(cfg.integrator);
    qgp::validate_theta_grid(cfg.theta_grid);
    return cfg;
}

std::string replace_extension(const std::string& path, const std::string& ext) {
    const std::size_t dot = path.find_last_of('.');
    const std::size_t slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "." + ext;
    return path.substr(0, dot) + "." + ext;
}

void print_rate_row(const char* label, double value) {
    std::printf("  %-16s %.12g\n", label, value);
}

int cmd_rates(const qgp::ExperimentConfig& cfg) {
    const double eps = cfg.qubit.epsilon;
    const qgp::BathParams& b = cfg.bath;
    std::printf("bath rates (alpha=%g, omega_c=%g, T=%g, epsilon=%g)\n", b.alpha, b.omega_c,
                b.temperature, eps);
    print_rate_row("c(+epsilon)", qgp::correlation_ft(b, eps));
    print_rate_row("c(-epsilon)", qgp::correlation_ft(b, -eps));
    print_rate_row("c(0)", qgp::correlation_ft(b, 0.0));
    print_rate_row("s(+epsilon)", qgp::hilbert_transform_s(b, eps, cfg.pv));
    print_rate_row("s(-epsilon)", qgp::hilbert_transform_s(b, -eps, cfg.pv));
    print_rate_row("s(0)", qgp::hilbert_transform_s(b, 0.0, cfg.pv));
    print_rate_row("KMS c(-e)/c(e)", qgp::kms_ratio(b, eps));
    return 0;
}

std::string sweep_title(const qgp::ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "Phi(" << cfg.integrator.periods << " periods)  mu_x=" << cfg.qubit.mu_x
       << " mu_z=" << cfg.qubit.mu_z << " T=" << cfg.bath.temperature
       << " alpha=" << cfg.bath.alpha;
    return os.str();
}

int cmd_sweep(const Flags& flags, qgp::ExperimentConfig cfg) {
    if (!flags.out.empty()) cfg.output.csv_path = flags.out;
    const qgp::SweepResult result = qgp::run_sweep(cfg);
    qgp::write_text_file(cfg.output.csv_path, qgp::sweep_csv_text(cfg, result));
    std::printf("wrote %s (%zu points)\n", cfg.output.csv_path.c_str(), result.records.size());

    std::string svg_path = cfg.output.svg_path;
    if (flags.svg && svg_path.empty()) svg_path = replace_extension(cfg.output.csv_path, "svg");
    if (!svg_path.empty()) {
        qgp::write_text_file(
            svg_path, qgp::sweep_svg_text(sweep_title(cfg), cfg.phase_window,
                                          {{sweep_title(cfg), &result}}));
        std::printf("wrote %s\n", svg_path.c_str());
    }
    return 0;
}

int cmd_figure(int figure, const Flags& flags, const qgp::ExperimentConfig& base) {
    const std::string prefix = flags.out.empty() ? "fig" + std::to_string(figure) : flags.out;
    const auto curves = qgp::figure_curves(figure, base);

    std::vector<qgp::SweepResult> results(curves.size());
    std::vector<std::pair<std::string, const qgp::SweepResult*>> svg_curves;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        qgp::ExperimentConfig cfg = curves[i].cfg;
        cfg.output.csv_path = prefix + "_" + curves[i].file_tag + ".csv";
        results[i] = qgp::run_sweep(cfg);
        qgp::write_text_file(cfg.output.csv_path, qgp::sweep_csv_text(cfg, results[i]));
        std::printf("wrote %s\n", cfg.output.csv_path.c_str());
        svg_curves.emplace_back(curves[i].label, &results[i]);
    }

    std::ostringstream title;
    title << "figure " << figure << " family";
    const std::string svg_path = prefix + ".svg";
    qgp::write_text_file(svg_path, qgp::sweep_svg_text(title.str(),
                                                       curves.front().cfg.phase_window,
                                                       svg_curves));
    std::printf("wrote %s\n", svg_path.c_str());
    return 0;
}

int cmd_validate() {
    const auto results = qgp::run_acceptance_suite(&std::cout);
    return qgp::all_passed(results) ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qubit geometric phase under weak Ohmic coupling"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_option("--config", flags.config_path, "experiment config file (INI sections)");
    app.add_option("--periods", flags.periods, "evolution length in free periods");
    app.add_option("--window", flags.window, "phase window: zero2pi | pmpi");
    app.add_option("--c0-override", flags.c0_override,
                   "effective temperature substituted into c(0) at T = 0");
    app.add_flag("--no-lamb-shift", flags.no_lamb_shift, "drop the Lamb shift");
    app.add_flag("--svg", flags.svg, "also write an SVG plot");
    app.add_option("--out", flags.out, "output path (CSV) or prefix (figures)");

    auto* rates = app.add_subcommand("rates", "print bath rates for the configured parameters");
    auto* sweep = app.add_subcommand("sweep", "sweep Phi over the initial polar angle");
    auto* figure = app.add_subcommand("figure", "run a preset multi-curve figure family");
    int figure_number = 0;
    figure->add_option("n", figure_number, "figure number")->required()->check(CLI::Range(1, 4));
    auto* validate = app.add_subcommand("validate", "run the built-in verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (validate->parsed()) return cmd_validate();
        const qgp::ExperimentConfig cfg = assemble_config(flags);
        if (rates->parsed()) return cmd_rates(cfg);
        if (sweep->parsed()) return cmd_sweep(flags, cfg);
        if (figure->parsed()) return cmd_figure(figure_number, flags, cfg);
    } catch (const qgp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
