#pragma once

#include <cstddef>
#include <string>

namespace gbr {

/// Outcome of a verification sweep: number of checks performed and, on
/// failure, a description of the first counterexample (both sides' values).
struct Report {
    std::string name;
    std::size_t checks = 0;
    bool passed = true;
    std::string first_failure;

    void record_failure(const std::string& what) {
        if (passed) first_failure = what;
        passed = false;
    }
};

}  // namespace gbr
