// config.hpp — Experiment configuration: INI-style sections [qubit], [bath],
// [integrator], [sweep], [output], parsed with line/key diagnostics and
// re-serializable in canonical form.

#pragma once

#include "qgp/bath.hpp"
#include "qgp/davies.hpp"
#include "qgp/evolution.hpp"
#include "qgp/phase.hpp"

#include <string>
#include <vector>

namespace qgp {

struct ThetaGrid {
    int count = 200;
    double min = 0.0;
    double max = kPi;
    // The default grid keeps a half-step away from the endpoints so the
    // stationary pure states at theta = 0, pi are not sampled exactly.
    bool include_endpoints = false;
};

void validate_theta_grid(const ThetaGrid& grid);
std::vector<double> theta_points(const ThetaGrid& grid);

struct OutputConfig {
    std::string csv_path = "sweep.csv";
    std::string svg_path; // empty: no plot
};

struct ExperimentConfig {
    QubitParams qubit;
    BathParams bath;
    PVQuadratureConfig pv;
    GeneratorOptions generator;
    IntegratorConfig integrator;
    ThetaGrid theta_grid;
    PhaseWindow phase_window = PhaseWindow::zero_to_2pi;
    OutputConfig output;
    int threads = 0; // 0: one worker per hardware thread
};

// Throws ConfigError with a "line N" or key-path prefix on malformed input.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

// Canonical INI rendering; parse(serialize(cfg)) reproduces cfg exactly.
std::string serialize_config(const ExperimentConfig& cfg);

const char* window_name(PhaseWindow window);        // "zero2pi" | "pmpi"
PhaseWindow parse_window(const std::string& name);  // throws ConfigError

const char* method_name(IntegrationMethod method);  // "rk4" | "exact_expm"
IntegrationMethod parse_method(const std::string& name);

} // namespace qgp
