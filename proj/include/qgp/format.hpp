// format.hpp — shortest decimal representation that round-trips a double.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace qgp {

inline std::string format_shortest(double v) {
    char buf[40];
    for (int digits = 15; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

} // namespace qgp
