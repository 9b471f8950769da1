// Acceptance suite: runs every verification criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion.

#include "qgp/validation.hpp"

#include <iostream>

int main() {
    const auto results = qgp::run_acceptance_suite(&std::cout);
    int failures = 0;
    for (const auto& r : results)
        if (!r.pass) ++failures;
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    return 0;
}
