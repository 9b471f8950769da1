// sweep.hpp — Parameter sweeps over the initial polar angle: parallel
// execution, CSV emission, SVG plotting, figure presets.

#pragma once

#include "qgp/config.hpp"
#include "qgp/svg.hpp"

#include <string>
#include <vector>

namespace qgp {

struct SweepRecord {
    double theta = 0.0;
    double phi = 0.0;       // in the configured window; NaN on failure
    double magnitude = 0.0; // NaN on failure
    bool degenerate = false;
    std::string error; // empty on success, otherwise the error class name

    // trajectory monitors, not part of the CSV schema
    double max_hermiticity_correction = 0.0;
    double max_trace_correction = 0.0;
    double min_eigenvalue = 1.0;
};

struct SweepResult {
    std::vector<SweepRecord> records; // one per grid point, ascending theta
};

// Builds the generator once and evaluates every grid point; points run on a
// worker pool (cfg.threads, 0 = hardware concurrency) and are collected in
// grid order, so output is independent of scheduling.
SweepResult run_sweep(const ExperimentConfig& cfg);

// Header row plus one record per line; a single '#' metadata line echoes all
// parameters. 17 significant digits throughout, so values round-trip exactly.
std::string sweep_csv_text(const ExperimentConfig& cfg, const SweepResult& result);

// One polyline of phi/pi against theta/pi per curve.
std::string sweep_svg_text(const std::string& title, PhaseWindow window,
                           const std::vector<std::pair<std::string, const SweepResult*>>& curves);

struct FigureCurve {
    std::string label;
    std::string file_tag; // filename-safe label fragment
    ExperimentConfig cfg;
};

// Preset curve families for the four study figures (1: pure dephasing,
// 2: dissipative strengths, 3: dephasing on top of dissipation,
// 4: temperature). The base config supplies everything not fixed by the
// preset; figure 1 inherits its c(0) override, so both zero-temperature
// dephasing conventions can be produced and are echoed in the CSV metadata.
std::vector<FigureCurve> figure_curves(int figure, const ExperimentConfig& base);

void write_text_file(const std::string& path, const std::string& text);

} // namespace qgp
