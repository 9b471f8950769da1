#include "qgp/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qgp {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::string render_svg_plot(const SvgAxes& axes, const std::vector<SvgCurve>& curves) {
    const double width = 720, height = 540;
    const double ml = 70, mr = 160, mt = 40, mb = 55;
    const double pw = width - ml - mr, ph = height - mt - mb;

    auto sx = [&](double x) { return ml + pw * (x - axes.x_min) / (axes.x_max - axes.x_min); };
    auto sy = [&](double y) { return mt + ph * (axes.y_max - y) / (axes.y_max - axes.y_min); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"22\" font-size=\"15\" text-anchor=\"middle\">"
       << axes.title << "</text>\n";

    // frame
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    // ticks and grid
    const double tick_eps_x = 1e-9 * (axes.x_max - axes.x_min);
    for (double x = axes.x_min; x <= axes.x_max + tick_eps_x; x += axes.x_tick) {
        const double px = sx(x);
        os << "<line x1=\"" << px << "\" y1=\"" << mt << "\" x2=\"" << px << "\" y2=\""
           << mt + ph << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << px << "\" y=\"" << mt + ph + 18
           << "\" font-size=\"12\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    }
    const double tick_eps_y = 1e-9 * (axes.y_max - axes.y_min);
    for (double y = axes.y_min; y <= axes.y_max + tick_eps_y; y += axes.y_tick) {
        const double py = sy(y);
        os << "<line x1=\"" << ml << "\" y1=\"" << py << "\" x2=\"" << ml + pw << "\" y2=\""
           << py << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << py + 4
           << "\" font-size=\"12\" text-anchor=\"end\">" << num(y) << "</text>\n";
    }

    os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 14
       << "\" font-size=\"13\" text-anchor=\"middle\">" << axes.x_label << "</text>\n";
    os << "<text x=\"18\" y=\"" << mt + ph / 2
       << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << mt + ph / 2 << ")\">" << axes.y_label << "</text>\n";

    // curves
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const char* color = kPalette[c % (sizeof kPalette / sizeof kPalette[0])];
        std::ostringstream pts;
        bool open = false;
        auto flush = [&]() {
            if (open) {
                os << "<polyline fill=\"none\" stroke=\"" << color
                   << "\" stroke-width=\"1.6\" points=\"" << pts.str() << "\"/>\n";
            }
            pts.str("");
            open = false;
        };
        for (std::size_t i = 0; i < curves[c].x.size(); ++i) {
            const double y = curves[c].y[i];
            if (std::isnan(y)) {
                flush();
                continue;
            }
            pts << num(sx(curves[c].x[i])) << "," << num(sy(y)) << " ";
            open = true;
        }
        flush();

        const double ly = mt + 16 + 18 * static_cast<double>(c);
        os << "<line x1=\"" << ml + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << ml + pw + 34
           << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << ml + pw + 40 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
           << curves[c].label << "</text>\n";
    }

    os << "</svg>\n";
    return os.str();
}

} // namespace qgp
