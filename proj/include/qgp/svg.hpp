// svg.hpp — Minimal hand-rolled SVG line plots for sweep output.

#pragma once

#include <string>
#include <vector>

namespace qgp {

struct SvgCurve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y; // NaN entries break the polyline
};

struct SvgAxes {
    std::string title;
    std::string x_label;
    std::string y_label;
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    double x_tick = 0.25, y_tick = 0.5;
};

std::string render_svg_plot(const SvgAxes& axes, const std::vector<SvgCurve>& curves);

} // namespace qgp
