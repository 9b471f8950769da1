#include "qgp/config.hpp"

#include "qgp/errors.hpp"
#include "qgp/format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qgp {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string fmt(double v) { return format_shortest(v); }

struct KeyContext {
    int line;
    const std::string& section;
    const std::string& key;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "line " << line << ": [" << section << "] " << key << ": " << msg;
        throw ConfigError(os.str());
    }
};

double parse_double(const KeyContext& ctx, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) ctx.fail("trailing characters in number '" + value + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        ctx.fail("expected a number, got '" + value + "'");
    }
}

long parse_long(const KeyContext& ctx, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) ctx.fail("trailing characters in integer '" + value + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        ctx.fail("expected an integer, got '" + value + "'");
    }
}

bool parse_bool(const KeyContext& ctx, const std::string& value) {
    if (value == "true" || value == "on" || value == "1") return true;
    if (value == "false" || value == "off" || value == "0") return false;
    ctx.fail("expected true/false, got '" + value + "'");
}

} // namespace

void validate_theta_grid(const ThetaGrid& grid) {
    if (grid.count < 2) throw ConfigError("[sweep] count must be >= 2");
    if (!(grid.min >= 0.0 && grid.max <= kPi && grid.min < grid.max))
        throw ConfigError("[sweep] theta range must satisfy 0 <= min < max <= pi");
}

std::vector<double> theta_points(const ThetaGrid& grid) {
    validate_theta_grid(grid);
    std::vector<double> pts;
    pts.reserve(grid.count);
    const double span = grid.max - grid.min;
    if (grid.include_endpoints) {
        for (int j = 0; j < grid.count; ++j)
            pts.push_back(grid.min + span * j / (grid.count - 1));
    } else {
        for (int j = 0; j < grid.count; ++j)
            pts.push_back(grid.min + span * (j + 0.5) / grid.count);
    }
    return pts;
}

const char* window_name(PhaseWindow window) {
    return window == PhaseWindow::zero_to_2pi ? "zero2pi" : "pmpi";
}

PhaseWindow parse_window(const std::string& name) {
    if (name == "zero2pi") return PhaseWindow::zero_to_2pi;
    if (name == "pmpi") return PhaseWindow::minus_pi_to_pi;
    throw ConfigError("unknown phase window '" + name + "' (expected zero2pi or pmpi)");
}

const char* method_name(IntegrationMethod method) {
    return method == IntegrationMethod::rk4 ? "rk4" : "exact_expm";
}

IntegrationMethod parse_method(const std::string& name) {
    if (name == "rk4") return IntegrationMethod::rk4;
    if (name == "exact_expm") return IntegrationMethod::exact_expm;
    throw ConfigError("unknown integrator method '" + name + "' (expected rk4 or exact_expm)");
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                std::ostringstream os;
                os << "line " << line_no << ": unterminated section header '" << line << "'";
                throw ConfigError(os.str());
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "qubit" && section != "bath" && section != "integrator" &&
                section != "sweep" && section != "output") {
                std::ostringstream os;
                os << "line " << line_no << ": unknown section [" << section << "]";
                throw ConfigError(os.str());
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << "line " << line_no << ": expected key = value, got '" << line << "'";
            throw ConfigError(os.str());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) {
            std::ostringstream os;
            os << "line " << line_no << ": key '" << key << "' outside any section";
            throw ConfigError(os.str());
        }
        const KeyContext ctx{line_no, section, key};
        if (key.empty()) ctx.fail("empty key");

        if (section == "qubit") {
            if (key == "epsilon") cfg.qubit.epsilon = parse_double(ctx, value);
            else if (key == "mu_x") cfg.qubit.mu_x = parse_double(ctx, value);
            else if (key == "mu_z") cfg.qubit.mu_z = parse_double(ctx, value);
            else if (key == "lamb_shift") cfg.generator.include_lamb_shift = parse_bool(ctx, value);
            else ctx.fail("unknown key");
        } else if (section == "bath") {
            if (key == "alpha") cfg.bath.alpha = parse_double(ctx, value);
            else if (key == "omega_c") cfg.bath.omega_c = parse_double(ctx, value);
            else if (key == "temperature") cfg.bath.temperature = parse_double(ctx, value);
            else if (key == "c0_override") cfg.bath.c0_override_temperature = parse_double(ctx, value);
            else if (key == "pv_halfwidth") cfg.pv.integration_halfwidth = parse_double(ctx, value);
            else if (key == "pv_interior_halfwidth") cfg.pv.interior_halfwidth = parse_double(ctx, value);
            else if (key == "pv_rel_tol") cfg.pv.rel_tol = parse_double(ctx, value);
            else if (key == "pv_max_subdivisions") cfg.pv.max_subdivisions = parse_long(ctx, value);
            else ctx.fail("unknown key");
        } else if (section == "integrator") {
            if (key == "method") {
                try {
                    cfg.integrator.method = parse_method(value);
                } catch (const ConfigError& e) {
                    ctx.fail(e.what());
                }
            } else if (key == "steps_per_period") {
                cfg.integrator.steps_per_period = static_cast<int>(parse_long(ctx, value));
            } else if (key == "periods") {
                cfg.integrator.periods = parse_double(ctx, value);
            } else ctx.fail("unknown key");
        } else if (section == "sweep") {
            if (key == "count") cfg.theta_grid.count = static_cast<int>(parse_long(ctx, value));
            else if (key == "theta_min") cfg.theta_grid.min = parse_double(ctx, value);
            else if (key == "theta_max") cfg.theta_grid.max = parse_double(ctx, value);
            else if (key == "include_endpoints") cfg.theta_grid.include_endpoints = parse_bool(ctx, value);
            else if (key == "threads") cfg.threads = static_cast<int>(parse_long(ctx, value));
            else ctx.fail("unknown key");
        } else { // output
            if (key == "csv") cfg.output.csv_path = value;
            else if (key == "svg") cfg.output.svg_path = value;
            else if (key == "window") {
                try {
                    cfg.phase_window = parse_window(value);
                } catch (const ConfigError& e) {
                    ctx.fail(e.what());
                }
            } else ctx.fail("unknown key");
        }
    }

    validate_qubit(cfg.qubit);
    validate_bath(cfg.bath);
    validate_integrator(cfg.integrator);
    validate_theta_grid(cfg.theta_grid);
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config_text(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "[qubit]\n"
       << "epsilon = " << fmt(cfg.qubit.epsilon) << "\n"
       << "mu_x = " << fmt(cfg.qubit.mu_x) << "\n"
       << "mu_z = " << fmt(cfg.qubit.mu_z) << "\n"
       << "lamb_shift = " << (cfg.generator.include_lamb_shift ? "true" : "false") << "\n\n";
    os << "[bath]\n"
       << "alpha = " << fmt(cfg.bath.alpha) << "\n"
       << "omega_c = " << fmt(cfg.bath.omega_c) << "\n"
       << "temperature = " << fmt(cfg.bath.temperature) << "\n"
       << "c0_override = " << fmt(cfg.bath.c0_override_temperature) << "\n"
       << "pv_halfwidth = " << fmt(cfg.pv.integration_halfwidth) << "\n"
       << "pv_interior_halfwidth = " << fmt(cfg.pv.interior_halfwidth) << "\n"
       << "pv_rel_tol = " << fmt(cfg.pv.rel_tol) << "\n"
       << "pv_max_subdivisions = " << cfg.pv.max_subdivisions << "\n\n";
    os << "[integrator]\n"
       << "method = " << method_name(cfg.integrator.method) << "\n"
       << "steps_per_period = " << cfg.integrator.steps_per_period << "\n"
       << "periods = " << fmt(cfg.integrator.periods) << "\n\n";
    os << "[sweep]\n"
       << "count = " << cfg.theta_grid.count << "\n"
       << "theta_min = " << fmt(cfg.theta_grid.min) << "\n"
       << "theta_max = " << fmt(cfg.theta_grid.max) << "\n"
       << "include_endpoints = " << (cfg.theta_grid.include_endpoints ? "true" : "false") << "\n"
       << "threads = " << cfg.threads << "\n\n";
    os << "[output]\n"
       << "csv = " << cfg.output.csv_path << "\n"
       << "svg = " << cfg.output.svg_path << "\n"
       << "window = " << window_name(cfg.phase_window) << "\n";
    return os.str();
}

} // namespace qgp
