#pragma once

#include <set>
#include <string>
#include <vector>

namespace obl {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::set<int> only; // empty = run everything
};

// Runs the acceptance criteria at their pinned tolerances and returns one
// result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

} // namespace obl
