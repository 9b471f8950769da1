#include "qgp/sweep.hpp"

#include "qgp/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace qgp;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.theta_grid.count = 6;
    cfg.theta_grid.min = 0.4;
    cfg.theta_grid.max = 2.6;
    cfg.integrator.steps_per_period = 400;
    cfg.qubit.mu_x = 0.3;
    return cfg;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("free sweep reproduces the analytic curve") {
    ExperimentConfig cfg;
    cfg.theta_grid.count = 5;
    const SweepResult result = run_sweep(cfg);
    REQUIRE(result.records.size() == 5);
    for (const auto& r : result.records) {
        CHECK(r.error.empty());
        CHECK(phase_distance(r.phi, free_phase(r.theta)) <= 1e-6);
        CHECK(r.magnitude == doctest::Approx(1.0).epsilon(1e-9));
        CHECK_FALSE(r.degenerate);
    }
}

TEST_CASE("csv output is byte-stable and schema-correct") {
    const ExperimentConfig cfg = small_config();
    const SweepResult a = run_sweep(cfg);
    const SweepResult b = run_sweep(cfg);
    const std::string csv_a = sweep_csv_text(cfg, a);
    const std::string csv_b = sweep_csv_text(cfg, b);
    CHECK(csv_a == csv_b);

    std::istringstream in(csv_a);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# ", 0) == 0); // metadata comment first
    std::getline(in, line);
    CHECK(line == "theta,phi,magnitude,degenerate,mu_x,mu_z,alpha,omega_c,temperature,periods,"
                  "error");
    CHECK(count_lines(csv_a) == 2 + cfg.theta_grid.count);

    // 17 significant digits round-trip the doubles exactly
    std::getline(in, line);
    const double theta = std::stod(line.substr(0, line.find(',')));
    CHECK(theta == a.records[0].theta);
}

TEST_CASE("serial and parallel sweeps produce identical bytes") {
    ExperimentConfig serial = small_config();
    serial.threads = 1;
    ExperimentConfig parallel = small_config();
    parallel.threads = 4;
    CHECK(sweep_csv_text(serial, run_sweep(serial)) ==
          sweep_csv_text(parallel, run_sweep(parallel)));
}

TEST_CASE("per-point failures are recorded and the sweep continues") {
    // violent dephasing pushes the equatorial state into the degenerate ball
    // within one period; neighbours stay clean
    ExperimentConfig cfg;
    cfg.qubit.mu_z = 5.0;
    cfg.bath.alpha = 1.0;
    cfg.bath.temperature = 10.0;
    cfg.integrator.steps_per_period = 4000;
    cfg.theta_grid.count = 5;
    cfg.theta_grid.min = 0.5 * kPi - 0.2;
    cfg.theta_grid.max = 0.5 * kPi + 0.2;
    cfg.theta_grid.include_endpoints = true;

    const SweepResult result = run_sweep(cfg);
    REQUIRE(result.records.size() == 5);
    CHECK(result.records[2].error == "DegeneratePhase");
    CHECK(result.records[2].degenerate);
    CHECK(std::isnan(result.records[2].phi));
    CHECK(result.records[0].error.empty());
    CHECK(result.records[4].error.empty());

    // the failed point lands in the CSV row with its error tag
    const std::string csv = sweep_csv_text(cfg, result);
    CHECK(csv.find("nan,nan,1") != std::string::npos);
    CHECK(csv.find("DegeneratePhase") != std::string::npos);
}

TEST_CASE("figure presets pin the couplings") {
    const ExperimentConfig base = parse_config_text("");

    auto fig1 = figure_curves(1, base);
    REQUIRE(fig1.size() == 4);
    for (const auto& c : fig1) {
        CHECK(c.cfg.qubit.mu_x == 0.0);
        CHECK(c.cfg.bath.temperature == 0.0);
        CHECK(c.cfg.phase_window == PhaseWindow::zero_to_2pi);
    }
    CHECK(fig1[1].cfg.qubit.mu_z == 0.5);

    auto fig2 = figure_curves(2, base);
    REQUIRE(fig2.size() == 3);
    CHECK(fig2[0].cfg.qubit.mu_x == 0.05);
    CHECK(fig2[1].cfg.qubit.mu_x == 0.3);
    CHECK(fig2[2].cfg.qubit.mu_x == 0.4);
    for (const auto& c : fig2) {
        CHECK(c.cfg.qubit.mu_z == 0.0);
        CHECK(c.cfg.phase_window == PhaseWindow::minus_pi_to_pi);
    }

    auto fig3 = figure_curves(3, base);
    REQUIRE(fig3.size() == 4);
    for (const auto& c : fig3) CHECK(c.cfg.qubit.mu_x == 0.3);

    auto fig4 = figure_curves(4, base);
    REQUIRE(fig4.size() == 3);
    CHECK(fig4[0].cfg.bath.temperature == 0.0);
    CHECK(fig4[1].cfg.bath.temperature == 0.5);
    CHECK(fig4[2].cfg.bath.temperature == 1.0);

    CHECK_THROWS_AS((void)figure_curves(5, base), ConfigError);

    // figure 1 inherits the zero-frequency override from the base config
    ExperimentConfig with_override = base;
    with_override.bath.c0_override_temperature = 0.05;
    auto fig1_override = figure_curves(1, with_override);
    CHECK(fig1_override[3].cfg.bath.c0_override_temperature == 0.05);
    const std::string csv =
        sweep_csv_text(fig1_override[0].cfg, SweepResult{});
    CHECK(csv.find("c0_override=0.05") != std::string::npos);
}

TEST_CASE("strict zero-temperature dephasing leaves the free curve unchanged") {
    // with the strict c(0) = 0 limit the dephasing jumps carry zero rate, so
    // every figure-1 curve coincides with the free one
    ExperimentConfig base = parse_config_text("");
    base.theta_grid.count = 4;
    base.integrator.steps_per_period = 500;
    const auto curves = figure_curves(1, base);
    const SweepResult free_curve = run_sweep(curves[0].cfg);
    const SweepResult strong = run_sweep(curves[3].cfg);
    for (std::size_t i = 0; i < free_curve.records.size(); ++i)
        CHECK(phase_distance(free_curve.records[i].phi, strong.records[i].phi) <= 1e-9);

    // the override separates them
    ExperimentConfig with_override = base;
    with_override.bath.c0_override_temperature = 0.5;
    const auto split = figure_curves(1, with_override);
    const SweepResult strong_override = run_sweep(split[3].cfg);
    double dev = 0.0;
    for (std::size_t i = 0; i < free_curve.records.size(); ++i)
        dev = std::max(dev, phase_distance(strong_override.records[i].phi,
                                           free_curve.records[i].phi));
    CHECK(dev > 1e-3);
}

TEST_CASE("svg rendering contains the curves") {
    const ExperimentConfig cfg = small_config();
    const SweepResult result = run_sweep(cfg);
    const std::string svg =
        sweep_svg_text("test plot", cfg.phase_window, {{"curve A", &result}});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("curve A") != std::string::npos);
    CHECK(svg.find("test plot") != std::string::npos);
    CHECK(svg.find("theta / pi") != std::string::npos);
}
