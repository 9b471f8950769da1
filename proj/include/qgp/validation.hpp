// validation.hpp — Built-in verification suite: exact analytic anchors plus
// qualitative shape checks for the standard study figures. Run by the
// `validate` CLI subcommand and by the acceptance test binary.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgp {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string comparison; // "<=" or ">"
    std::string detail;     // additional clause-by-clause information
};

// Runs every criterion; when progress is non-null each result is printed as it
// completes (one PASS/FAIL line per criterion).
std::vector<CriterionResult> run_acceptance_suite(std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

void print_result(std::ostream& os, const CriterionResult& r);

} // namespace qgp
